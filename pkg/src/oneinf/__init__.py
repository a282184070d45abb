"""Exact reconstruction of the four arithmetic (1;oo) groups and their curves."""
__version__ = "0.1.0"
