"""Exact construction and verification of Koornwinder polynomials."""
