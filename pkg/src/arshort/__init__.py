"""Exact computations with modules over bound quiver algebras.

The package covers Auslander-Reiten translates, knitting of AR quivers,
short-chain detection, tilting modules and the reconstruction of a
hereditary algebra H, a tilting H-module T and an injective H-module I for
modules that are not the middle of a short chain.
"""

__version__ = "0.1.0"
