"""Transforms, sensitivities, Kraus oracle and distance optimization"""
