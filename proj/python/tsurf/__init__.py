"""Circle packings on translation surfaces.

Surfaces, packings and reports are plain dicts in the same JSON layout the
command-line tool reads and writes.
"""

import json as _json

from . import _tsurf
from ._tsurf import (
    DomainError,
    Error,
    InadmissibleCircleError,
    InconsistentSurfaceError,
    InternalConsistencyError,
    InvalidSurfaceError,
    RadiusTooLargeError,
    StructuralError,
    construction_names,
    default_tol,
)

__all__ = [
    "analyze", "check_packing", "compare", "construct", "construction_names", "graph",
    "graph_stats", "pattern", "realize", "render", "search", "validate",
    "Error", "StructuralError", "DomainError", "InvalidSurfaceError", "InconsistentSurfaceError",
    "InternalConsistencyError", "RadiusTooLargeError", "InadmissibleCircleError",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def construct(name, genus=2, sides=8, side=1.0, stretch=1.0, radius=None):
    return _json.loads(_tsurf.construct(name, genus, sides, side, stretch, radius))


def validate(surface, tol=default_tol):
    return _json.loads(_tsurf.validate(_text(surface), tol))


def analyze(surface, tol=default_tol):
    return _json.loads(_tsurf.analyze(_text(surface), tol))


def check_packing(packing, tol=default_tol):
    return _json.loads(_tsurf.check_packing(_text(packing), tol))


def graph(packing, tol=default_tol):
    return _json.loads(_tsurf.graph(_text(packing), tol))


def graph_stats(packing, tol=default_tol):
    """(max multi-edges between two circles, max loops on one circle)."""
    return _tsurf.graph_stats(_text(packing), tol)


def pattern(packing, tol=default_tol):
    return _json.loads(_tsurf.pattern(_text(packing), tol))


def compare(first, second, tol=default_tol):
    return _json.loads(_tsurf.compare(_text(first), _text(second), tol))


def realize(surface, target, seed=0, attempts=64, threads=0, tol=default_tol):
    return _json.loads(_tsurf.realize(_text(surface), _text(target), seed, attempts, threads, tol))


def search(trials, seed=0, strategy="one_cone_circle", inject=False, threads=0, tol=default_tol):
    return _json.loads(_tsurf.search(trials, seed, strategy, inject, threads, tol))


def render(document, width=640.0, tangencies=True, tol=default_tol):
    return _tsurf.render(_text(document), width, tangencies, tol)
