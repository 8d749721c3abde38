"""Exact continued fractions, increasing trees and their cross-checks."""

from __future__ import annotations

from .contfrac import (CoeffSeq, JFractionSpec, QuasiAffineSpec, SFractionSpec, TFractionSpec, expand_j,
                       expand_s, expand_t, quasi_affine)
from .poly import IndexedSymbol, Poly, Series, sym

__version__ = "0.1.0"

__all__ = ["CoeffSeq", "IndexedSymbol", "JFractionSpec", "Poly", "QuasiAffineSpec", "SFractionSpec", "Series",
           "TFractionSpec", "expand_j", "expand_s", "expand_t", "quasi_affine", "sym"]
