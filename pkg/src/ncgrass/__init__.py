"""Exact verification of quasideterminant, quasi-Plücker and quantum Grassmannian identities."""

__version__ = "0.1.0"
