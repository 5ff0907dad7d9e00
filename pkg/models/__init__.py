"""Value types for registers, observables, noise and surface-code resources"""
