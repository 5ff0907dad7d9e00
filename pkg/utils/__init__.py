"""Walsh-Hadamard helpers, error types and report formatting"""
