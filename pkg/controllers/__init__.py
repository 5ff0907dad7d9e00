"""Command handlers: run config in, report and exit code out"""
