"""Desk-scale computational companion for largeness notions in commutative
semigroups: IP sets, finite sums, combinatorially rich sets and polynomial
largeness, with bounded searches, greedy splitters and checkable certificates.
"""

from __future__ import annotations

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
