"""
monodec - certified decisions for monomial ideals and their Stanley-Reisner complexes
"""

__version__ = "0.1.0"
