"""Primitive disk complexes of genus two Heegaard splittings of lens spaces"""
__version__ = "0.1.0"
