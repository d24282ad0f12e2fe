"""Torsion pairs in the finite 2-Calabi-Yau categories A_{n,t} and D_{n,t}."""

from ._cy2 import Category, T, count, count_ptolemy, s, t_n1, verify

__all__ = ["Category", "T", "count", "count_ptolemy", "s", "t_n1", "verify"]
