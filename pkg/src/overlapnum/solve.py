"""Overlap number of an arbitrary graph: closed forms where the graph class
has one, composition over components, exact search otherwise."""

from __future__ import annotations

from dataclasses import dataclass

from . import closed_forms as cf
from .graph import ClassKind, Graph, classify, induced_subgraph
from .representation import Representation, canonicalize, place, verify
from .search import SearchBudget, overlap_number_exact


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Representation
    method: str
    exact: bool = True  # False: value is only an upper bound


def _on_order(order, sets, n) -> Representation:
    return place(dict(zip(order, sets)), n)


def solve_auto(g: Graph, budget: SearchBudget | None = None) -> SolveResult:
    res = _solve(g, budget)
    report = verify(g, res.witness)
    if not report.valid:
        raise AssertionError(f"{res.method} produced an invalid witness: {report.violations[:3]}")
    assert res.witness.size == res.value
    return res


def _solve(g: Graph, budget) -> SolveResult:
    cls = classify(g)
    kind = cls.kind
    if kind is ClassKind.SINGLE_VERTEX:
        return SolveResult(1, Representation.of({0}), "closed-form: single-vertex")
    if kind is ClassKind.CLIQUE:
        sr = cf.clique_representation(g.n)
        return SolveResult(sr.claimed_size, sr.representation, "closed-form: clique")
    if kind is ClassKind.COMPLETE_MULTIPARTITE:
        rep = cf.multipartite_representation_on(cls.parts, g.n)
        return SolveResult(cf.clique_overlap_number(len(cls.parts)), rep,
                           "closed-form: kpartite")
    if kind is ClassKind.PATH:
        sr = cf.path_representation(g.n)
        return SolveResult(g.n, _on_order(cls.order, sr.representation.sets, g.n),
                           "closed-form: path")
    if kind is ClassKind.CYCLE:
        sr = cf.cycle_representation(g.n)
        return SolveResult(g.n - 1, _on_order(cls.order, sr.representation.sets, g.n),
                           "closed-form: cycle")
    if kind is ClassKind.CATERPILLAR:
        # relabel so the constructor sees 0..n-1, then map back
        ids = list(cls.spine) + [w for lv in cls.leaves for w in lv]
        local = {v: i for i, v in enumerate(ids)}
        sr = cf.caterpillar_representation([local[s] for s in cls.spine],
                                           [[local[w] for w in lv] for lv in cls.leaves])
        rep = place({v: sr.representation[local[v]] for v in ids}, g.n)
        return SolveResult(sr.claimed_size, rep, "closed-form: caterpillar")
    if kind is ClassKind.DISCONNECTED:
        parts, exact = [], True
        for comp in cls.components:
            h, _ = induced_subgraph(g, comp)
            sub = _solve(h, budget)
            exact &= sub.exact
            parts.append(cf.SizedRepresentation(sub.witness, sub.value, ClassKind.OTHER))
        sr = cf.compose_components(parts, cls.components)
        return SolveResult(sr.claimed_size, canonicalize(sr.representation),
                           "components", exact)
    out = overlap_number_exact(g, budget)
    if out.exact:
        return SolveResult(out.value, out.witness, "exact-search")
    sr = cf.ecc_overlap_representation(g)
    return SolveResult(sr.claimed_size, canonicalize(sr.representation),
                       "upper-bound: ecc", exact=False)
