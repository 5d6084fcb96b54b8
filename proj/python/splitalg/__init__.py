"""Exact splitting algebras of monic polynomials over commutative rings.

Thin wrapper over the compiled core: string in, parsed JSON out.  Ring
arguments use the same spec grammar as the command line tool (Z, Q, Fp(p),
GF(p, k), Zmod(m), Poly(A; x, y), Frac(P), Quot(P, m), Prod(A, B)).
"""

import json as _json

from ._core import (
    SplitError,
    basis_size,
    discriminant,
    normalize,
    symreduce,
)
from . import _core


def invariants(ring, poly):
    """Generators of the module fixed by every root permutation."""
    return _json.loads(_core.invariants_json(ring, poly))


def theorem(ring, poly):
    """Regularity hypotheses and whether the fixed module is trivial."""
    return _json.loads(_core.theorem_json(ring, poly))


def decompose(ring, poly, factors):
    """Shuffle decomposition of the algebra along a factorization."""
    return _json.loads(_core.decompose_json(ring, poly, list(factors)))


def galois(ring, poly):
    """Residue automorphism group of the algebra over a finite field."""
    return _json.loads(_core.galois_json(ring, poly))


def maxideals(ring, poly):
    """Maximal ideals with kernel bases and residue degrees."""
    return _json.loads(_core.maxideals_json(ring, poly))


def search_exceptional(ring, degree):
    """Polynomials over the ring whose fixed module is strictly bigger."""
    return _json.loads(_core.search_json(ring, degree))


def demo_inseparable():
    """Worked inseparable cubic whose algebra has nilpotent root differences."""
    return _json.loads(_core.demo_json())


def verify(ring, poly):
    """Cross-check the main routes against independent oracles."""
    return _json.loads(_core.verify_json(ring, poly))


__all__ = [
    "SplitError",
    "basis_size",
    "decompose",
    "demo_inseparable",
    "discriminant",
    "galois",
    "invariants",
    "maxideals",
    "normalize",
    "search_exceptional",
    "symreduce",
    "theorem",
    "verify",
]
