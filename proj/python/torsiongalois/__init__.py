"""Exact torsion characteristic polynomials and mod-3 Galois images.

Thin wrapper over the C++ core: every function takes the CLI's textual inputs
("a1,a2,a3,a4,a6" curves, "a,b,c" linear functions) and returns decoded JSON.
"""

import json as _json

from . import _core

__all__ = ["divpoly", "charpoly", "classify_mod3", "minus_id", "run_corpus"]


def divpoly(curve, n, primitive=False):
    """Division polynomial psi_n, or the primitive part psi~_n."""
    return _json.loads(_core.divpoly_json(curve, n, primitive))


def charpoly(curve, u, n, method="both"):
    """Characteristic polynomial chi_{u,n}; method in {matrix, resultant, both}."""
    return _json.loads(_core.charpoly_json(curve, u, n, method))


def classify_mod3(curve, probe_bound=100000):
    """Mod-3 Galois image label with evidence."""
    return _json.loads(_core.classify_mod3_json(curve, probe_bound))


def minus_id(curve, ell, bound=100000):
    """Search for a Frobenius witness that -id lies in the mod-ell image."""
    return _json.loads(_core.minus_id_json(curve, ell, bound))


def run_corpus(path, threads=0):
    """Run a corpus JSON file and return the report."""
    return _json.loads(_core.run_corpus_json(path, threads))
