"""Exact-arithmetic toolkit for Hecke algebras, symmetric groups, and
representation-dimension bound witnesses."""

__version__ = "0.1.0"
