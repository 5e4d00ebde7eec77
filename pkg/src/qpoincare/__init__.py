"""Exact symbolic verifier for a two-parameter deformation of the Poincare algebra."""

__version__ = "0.1.0"
