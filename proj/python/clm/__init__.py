"""Exact-arithmetic complete collineations.

Thin wrapper over the compiled extension: every operation takes and returns
plain Python data (dicts, lists, strings for exact rationals), converted to
the library's canonical JSON on the way through.  Malformed or out-of-domain
input raises ValueError.
"""

import json as _json

from . import _core

__all__ = [
    "classify",
    "weight_support",
    "dims",
    "limit",
    "halphen",
    "validate_collineation",
    "flags",
    "chain_from_collineation",
    "collineation_from_chain",
    "validate_chain",
    "sink_source",
    "isotropy",
    "section_dim_identity",
    "snake_oil",
    "section_series",
    "subspace",
    "context",
]


def _out(text):
    return _json.loads(text)


def _in(value):
    return _json.dumps(value)


def subspace(basis, ambient=None, split=None):
    """Build a subspace document from basis rows.

    Rows may hold ints, floats that are exact integers, or rational strings
    like "2/3".  ``split=(dim_v, dim_w)`` records the two-factor structure
    required by classify, sink_source, and isotropy.
    """
    rows = [[_entry(x) for x in row] for row in basis]
    if ambient is None:
        ambient = len(rows[0]) if rows else 0
    doc = {
        "ambient": ambient,
        "basis": {"rows": len(rows), "cols": ambient, "entries": rows},
        "split": None if split is None else {"dim_v": split[0], "dim_w": split[1]},
    }
    return doc


def context(dim_v, dim_w, u):
    return {"dim_v": dim_v, "dim_w": dim_w, "u": u}


def _entry(x):
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        raise ValueError("matrix entries must be numbers or rational strings")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    raise ValueError("matrix entries must be integers or rational strings like '2/3'")


def _matrix(rows):
    entries = [[_entry(x) for x in row] for row in rows]
    return {
        "rows": len(entries),
        "cols": len(entries[0]) if entries else 0,
        "entries": entries,
    }


def classify(subspace_doc, sigma):
    """Stability report for a subspace of V (+) W at linearization sigma."""
    return _out(_core.classify(_in(subspace_doc), str(sigma)))


def weight_support(subspace_doc):
    """Scaling weights on the nonzero Pluecker coordinates, plus orbit degree."""
    return _out(_core.weight_support(_in(subspace_doc)))


def dims(dim_v, dim_w, u, flavor="general"):
    """Quotient, wall, and fixed-locus dimension bookkeeping."""
    return _out(_core.dims(dim_v, dim_w, u, flavor))


def limit(family, ctx, flavor="general"):
    """Limit at t = 0 of a family of maps.

    ``family`` is a polynomial matrix document, or a plain list of rows whose
    entries are coefficient lists (ascending powers of t).  ``ctx`` may be a
    context document or a (dim_v, dim_w, u) tuple.
    """
    return _out(_core.limit(_in(_poly_matrix(family)), _in(_ctx(ctx)), flavor))


def halphen(a, ctx=None):
    """Torus degeneration of an invertible matrix into a rank-1 staircase."""
    doc = a if isinstance(a, dict) else _matrix(a)
    return _out(_core.halphen(_in(doc), None if ctx is None else _in(_ctx(ctx))))


def validate_collineation(cc):
    return _out(_core.validate_collineation(_in(cc)))


def flags(cc):
    return _out(_core.flags(_in(cc)))


def chain_from_collineation(cc):
    return _out(_core.chain_from_collineation(_in(cc)))


def collineation_from_chain(chain):
    return _out(_core.collineation_from_chain(_in(chain)))


def validate_chain(chain):
    return _out(_core.validate_chain(_in(chain)))


def sink_source(subspace_doc):
    return _out(_core.sink_source(_in(subspace_doc)))


def isotropy(subspace_doc, kind):
    """Isotropy report; ``kind`` is "symplectic" or "symmetric"."""
    return _out(_core.isotropy(_in(subspace_doc), kind))


def section_dim_identity(u, k):
    return _out(_core.section_dim_identity(u, k))


def snake_oil(j, order=30):
    return _out(_core.snake_oil(j, order))


def section_series(k, order=30):
    return _out(_core.section_series(k, order))


def _ctx(ctx):
    if isinstance(ctx, dict):
        return ctx
    dim_v, dim_w, u = ctx
    return context(dim_v, dim_w, u)


def _poly_matrix(family):
    if isinstance(family, dict):
        return family
    rows = [[_poly(entry) for entry in row] for row in family]
    return {
        "rows": len(rows),
        "cols": len(rows[0]) if rows else 0,
        "entries": rows,
    }


def _poly(entry):
    if isinstance(entry, (list, tuple)):
        return [_entry(c) for c in entry]
    return [_entry(entry)]
