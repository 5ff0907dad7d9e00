"""File-backed storage for vectors, run configs and reports"""
