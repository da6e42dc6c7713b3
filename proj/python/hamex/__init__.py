"""Extremal bounds for Hamiltonicity under a minimum-degree constraint.

Graphs travel as Graph objects (or graph6 strings via Graph.from_graph6);
structured results come back as plain dicts decoded from the same JSON the
CLI emits, so the schemas are identical across both surfaces.
"""

import json as _json

from _hamex import (
    Graph,
    are_isomorphic,
    build_family,
    closure,
    disjoint_union,
    erdos_threshold,
    evaluate,
    family_clique_count,
    family_clique_count_variant,
    family_edge_count,
    family_max,
    find_deficiency_set,
    is_connected,
    join,
    kelmans,
    quotient_spectral_radius,
    satisfies,
)

import _hamex as _core

__all__ = [
    "Graph",
    "are_isomorphic",
    "build_family",
    "check_feasibility",
    "closure",
    "disjoint_union",
    "erdos_threshold",
    "evaluate",
    "family_clique_count",
    "family_clique_count_variant",
    "family_edge_count",
    "family_max",
    "find_deficiency_set",
    "is_connected",
    "join",
    "kelmans",
    "quotient_spectral_radius",
    "reduce_graph",
    "satisfies",
    "verify_certificate",
    "verify_erdos",
    "verify_theorem",
    "verify_weak_bound",
]


def reduce_graph(g, property, k, parameter):
    """Run the two-stage reduction; returns the certificate as a dict."""
    return _json.loads(_core.reduce_graph_json(g, property, k, parameter))


def verify_certificate(certificate, parameter, tol=1e-9):
    """Replay and check a certificate dict (or its JSON string)."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core.verify_certificate_json(certificate, parameter, tol)


def check_feasibility(parameter, nmax=6, strict=False, tol=1e-9, jobs=0):
    """Test the growth axioms over all connected graphs up to nmax."""
    return _json.loads(_core.check_feasibility_json(parameter, nmax, strict, tol, jobs))


def verify_theorem(n, k, property, parameter, source="", tol=1e-9, jobs=0,
                   no_prefilter=False, allow_large=False):
    """Maximize the parameter over property-failing graphs and compare to the family."""
    return _json.loads(_core.verify_theorem_json(
        n, k, property, parameter, source, tol, jobs, no_prefilter, allow_large))


def verify_weak_bound(n, k, property, parameter, source="", tol=1e-9, jobs=0,
                      no_prefilter=False, allow_large=False):
    """Upper-bound mode for clique counts, with the endpoint check."""
    return _json.loads(_core.verify_weak_bound_json(
        n, k, property, parameter, source, tol, jobs, no_prefilter, allow_large))


def verify_erdos(n, k, jobs=0, allow_large=False):
    """Edge-threshold sweep; n = 8 needs allow_large."""
    return _json.loads(_core.verify_erdos_json(n, k, jobs, allow_large))
