"""Generating functions for alternating links and tangles, with a diagram oracle."""
