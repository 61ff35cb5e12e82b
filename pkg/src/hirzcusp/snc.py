"""Weighted dual graphs of SNC divisors and their combinatorial invariants.

A vertex stands for an irreducible component ``D_i`` and carries its
self-intersection and geometric genus; an edge ``(i, j, k)`` records that
``D_i`` and ``D_j`` meet transversally in ``k`` points.  Nothing here needs
an ambient canonical class: ``(K + D).D_i`` is always evaluated by
adjunction as ``2 g(D_i) - 2 + beta(D_i)``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from hirzcusp import exact
from hirzcusp.errors import DomainError

__all__ = [
    "Bark",
    "Classification",
    "Fork",
    "ForkBark",
    "SncGraph",
    "ZariskiFujitaReport",
    "almost_minimal_test",
    "bark_of_chain",
    "bark_of_fork",
    "bark_total",
    "branching_number",
    "classify",
    "is_negative_definite",
    "pa_of_divisor",
    "verify_zariski_fujita",
    "zariski_fujita_candidate",
]

SCHEMA = "hirzcusp.snc-graph/1"


class SncGraph:
    """Dual graph with vertices ``(self_intersection, genus, label)``."""

    def __init__(self, vertices: Iterable[Sequence], edges: Iterable[Sequence[int]] = ()):
        self.self_int: list[int] = []
        self.genus: list[int] = []
        self.labels: list[str] = []
        for idx, v in enumerate(vertices):
            w, g = int(v[0]), int(v[1])
            label = str(v[2]) if len(v) > 2 else f"D{idx + 1}"
            if g < 0:
                raise DomainError(f"vertex {label} has negative genus {g}")
            self.self_int.append(w)
            self.genus.append(g)
            self.labels.append(label)
        n = len(self.self_int)
        self.adj: list[dict[int, int]] = [{} for _ in range(n)]
        self.edges: list[tuple[int, int, int]] = []
        for edge in edges:
            i, j, k = (int(x) for x in edge)
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({i}, {j}) refers to a missing vertex")
            if i == j:
                raise DomainError(f"self-loop at vertex {i}: components must be smooth")
            if k < 1:
                raise DomainError(f"edge ({i}, {j}) has multiplicity {k} < 1")
            if j in self.adj[i]:
                raise DomainError(f"edge ({i}, {j}) listed twice")
            self.adj[i][j] = k
            self.adj[j][i] = k
            self.edges.append((min(i, j), max(i, j), k))

    def __len__(self):
        return len(self.self_int)

    def __repr__(self):
        return f"SncGraph({len(self)} vertices, {len(self.edges)} edges)"

    def dot(self, i: int, j: int) -> int:
        if i == j:
            return self.self_int[i]
        return self.adj[i].get(j, 0)

    def matrix(self, subset: Sequence[int]) -> list[list[int]]:
        return [[self.dot(i, j) for j in subset] for i in subset]

    def branching(self, i: int) -> int:
        return sum(self.adj[i].values())

    def log_degree(self, i: int) -> int:
        """(K + D).D_i by adjunction."""
        return 2 * self.genus[i] - 2 + self.branching(i)

    def components(self) -> list[list[int]]:
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            comp, queue = [], deque([start])
            seen[start] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for u in sorted(self.adj[v]):
                    if not seen[u]:
                        seen[u] = True
                        queue.append(u)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self) > 0 and len(self.components()) == 1

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "vertices": [
                {"label": l, "self_intersection": w, "genus": g}
                for l, w, g in zip(self.labels, self.self_int, self.genus)],
            "edges": [{"i": i, "j": j, "multiplicity": k} for i, j, k in self.edges],
        }

    @classmethod
    def from_json(cls, doc: dict) -> SncGraph:
        """Accepts a graph document or any document with a nested ``graph``."""
        if "vertices" not in doc and "graph" in doc:
            doc = doc["graph"]
        try:
            vertices = [(v["self_intersection"], v.get("genus", 0), v.get("label", f"D{n + 1}"))
                        for n, v in enumerate(doc["vertices"])]
            edges = [(x["i"], x["j"], x.get("multiplicity", 1)) for x in doc.get("edges", [])]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed graph document: {exc}") from None
        return cls(vertices, edges)

    @classmethod
    def chain(cls, self_ints: Sequence[int], genus: int = 0) -> SncGraph:
        """A standalone linear chain (a rod, or an isolated vertex for length one)."""
        return cls([(w, genus, f"D{i + 1}") for i, w in enumerate(self_ints)],
                   [(i, i + 1, 1) for i in range(len(self_ints) - 1)])


def branching_number(g: SncGraph, i: int) -> int:
    return g.branching(i)


def is_negative_definite(g: SncGraph, subset: Iterable[int] | None = None) -> bool:
    """Exact Sylvester test on the intersection matrix of ``subset`` (default: all vertices).

    The empty subset is vacuously negative definite.
    """
    idx = list(range(len(g))) if subset is None else list(subset)
    return exact.is_negative_definite(g.matrix(idx))


def pa_of_divisor(g: SncGraph) -> int:
    if not g.is_connected():
        raise DomainError("arithmetic genus is computed for connected divisors only")
    return sum(g.genus) + sum(k for _, _, k in g.edges) - len(g) + 1


# --- barks -------------------------------------------------------------


@dataclass(frozen=True)
class Bark:
    """Effective Q-divisor supported on some vertices of a graph."""

    support: tuple[int, ...] = ()
    coefficients: tuple[Fraction, ...] = ()

    def as_dict(self) -> dict[int, Fraction]:
        return dict(zip(self.support, self.coefficients))

    def __add__(self, other: Bark) -> Bark:
        merged = self.as_dict()
        for v, c in other.as_dict().items():
            merged[v] = merged.get(v, Fraction(0)) + c
        keys = sorted(merged)
        return Bark(tuple(keys), tuple(merged[k] for k in keys))

    def dot_vertex(self, g: SncGraph, i: int) -> Fraction:
        return sum((c * g.dot(v, i) for v, c in zip(self.support, self.coefficients)),
                   Fraction(0))

    def is_empty(self) -> bool:
        return not self.support

    def to_json(self, g: SncGraph | None = None) -> list[dict]:
        return [{"vertex": v, "label": g.labels[v] if g else None, "coefficient": str(c)}
                for v, c in zip(self.support, self.coefficients)]


def _check_chain(g: SncGraph, chain: Sequence[int], what: str = "chain") -> None:
    if not chain:
        raise DomainError(f"empty {what}")
    if len(set(chain)) != len(chain):
        raise DomainError(f"{what} repeats a vertex")
    for v in chain:
        if g.genus[v] != 0:
            raise DomainError(f"{what} vertex {g.labels[v]} is not rational")
        if g.self_int[v] > -2:
            raise DomainError(
                f"{what} vertex {g.labels[v]} has self-intersection {g.self_int[v]} > -2 "
                "(not admissible)")
    members = set(chain)
    for x, u in enumerate(chain):
        inside = {v: k for v, k in g.adj[u].items() if v in members}
        want = {chain[y]: 1 for y in (x - 1, x + 1) if 0 <= y < len(chain)}
        if inside != want:
            raise DomainError(f"{what} vertices are not arranged as a linear chain")


def bark_of_chain(g: SncGraph, chain: Sequence[int]) -> Bark:
    """Bark of a rational admissible linear chain, solved exactly."""
    _check_chain(g, chain)
    rhs = [g.log_degree(v) for v in chain]
    num, den = exact.solve_chain([g.self_int[v] for v in chain], rhs)
    if den == 0:
        raise ArithmeticError("chain matrix is singular")
    return Bark(tuple(chain), tuple(Fraction(x, den) for x in num))


def bark_residual(g: SncGraph, chain: Sequence[int], bark: Bark) -> list[Fraction]:
    """Bk.D_i - (K + D).D_i for each chain vertex; identically zero for a correct bark."""
    return [bark.dot_vertex(g, v) - g.log_degree(v) for v in chain]


# --- classification ----------------------------------------------------


@dataclass(frozen=True)
class Fork:
    center: int
    twigs: tuple[tuple[int, ...], ...]
    condition_value: Fraction
    admissible: bool

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.center,) + tuple(v for t in self.twigs for v in t)))


@dataclass
class Classification:
    isolated: list[int] = field(default_factory=list)
    tips: list[int] = field(default_factory=list)
    branching: list[int] = field(default_factory=list)
    rods: list[tuple[int, ...]] = field(default_factory=list)
    twigs: list[tuple[int, ...]] = field(default_factory=list)
    maximal_twigs: list[tuple[int, ...]] = field(default_factory=list)
    twig_anchor: dict[tuple[int, ...], int] = field(default_factory=dict)
    forks: list[Fork] = field(default_factory=list)

    def rational_maximal_twigs(self, g: SncGraph) -> list[tuple[int, ...]]:
        return [t for t in self.maximal_twigs if all(g.genus[v] == 0 for v in t)]


def _walk_from_tip(g: SncGraph, tip: int) -> tuple[list[int], int | None]:
    """Follow a linear chain from a tip; returns (chain, next vertex) with next=None for a rod."""
    chain = [tip]
    prev, cur = None, tip
    while True:
        nxt = next(u for u in g.adj[cur] if u != prev)
        if g.branching(nxt) == 2:
            chain.append(nxt)
            prev, cur = cur, nxt
            continue
        if g.branching(nxt) == 1:
            chain.append(nxt)
            return chain, None
        return chain, nxt


def _twig_order(g: SncGraph, twig: tuple[int, ...]):
    return (-len(twig), g.labels[twig[0]])


def classify(g: SncGraph) -> Classification:
    """Tips, rods, twigs, maximal twigs, branching components and forks of ``g``.

    Isolated vertices are reported under ``isolated`` and also as one-vertex
    rods, so that an isolated admissible curve contributes its bark.
    Twigs are listed with the tip first; ``twig_anchor`` maps each maximal
    twig to the branching component it is attached to.
    """
    out = Classification()
    for v in range(len(g)):
        beta = g.branching(v)
        if beta == 0:
            out.isolated.append(v)
            out.rods.append((v,))
        elif beta == 1:
            out.tips.append(v)
        elif beta >= 3:
            out.branching.append(v)

    seen_rods = set()
    for tip in out.tips:
        chain, nxt = _walk_from_tip(g, tip)
        if nxt is None:
            key = frozenset(chain)
            if key not in seen_rods:
                seen_rods.add(key)
                out.rods.append(tuple(chain) if chain[0] < chain[-1] else tuple(chain[::-1]))
            continue
        twig = tuple(chain)
        out.maximal_twigs.append(twig)
        out.twig_anchor[twig] = nxt
        for k in range(1, len(twig) + 1):
            out.twigs.append(twig[:k])

    by_anchor: dict[int, list[tuple[int, ...]]] = {}
    for twig, anchor in out.twig_anchor.items():
        by_anchor.setdefault(anchor, []).append(twig)
    for comp in g.components():
        members = set(comp)
        for center in comp:
            twigs = by_anchor.get(center, [])
            if len(twigs) != 3 or g.branching(center) != 3:
                continue
            covered = {center} | {v for t in twigs for v in t}
            if covered != members:
                continue
            if g.genus[center] != 0 or not all(_rational_admissible(g, t) for t in twigs):
                continue
            ordered = tuple(sorted(twigs, key=lambda t: _twig_order(g, t)))
            value = fork_condition_value(g, center, ordered)
            if value < 0:
                out.forks.append(Fork(center, ordered, value, g.self_int[center] <= -2))
    return out


def _rational_admissible(g: SncGraph, chain: Sequence[int]) -> bool:
    return all(g.genus[v] == 0 and g.self_int[v] <= -2 for v in chain)


def fork_condition_value(g: SncGraph, center: int, twigs: Sequence[Sequence[int]]) -> Fraction:
    """(K + F - B).F_1 where B is the sum of the three twig barks.

    With F_1 rational and met once by each twig, (K + F).F_1 = 1, so the
    value is ``1 - sum`` of the bark coefficients next to the center; it is
    negative exactly when the reciprocal twig determinants sum to more than 1.
    """
    total = Fraction(2 * g.genus[center] - 2 + g.branching(center))
    for twig in twigs:
        total -= bark_of_chain(g, twig).dot_vertex(g, center)
    return total


@dataclass(frozen=True)
class ForkBark:
    """Bark data of a fork candidate.

    ``twig_bark`` is the sum of the three twig barks; ``bark`` is the unique
    Q-divisor on the whole fork matching (K + D) on every component, present
    only for admissible forks.
    """

    center: int
    twigs: tuple[tuple[int, ...], ...]
    twig_bark: Bark
    condition_value: Fraction
    is_fork: bool
    admissible: bool
    contractible: bool
    bark: Bark | None


def bark_of_fork(g: SncGraph, center: int, twigs: Sequence[Sequence[int]]) -> ForkBark:
    if len(twigs) != 3:
        raise DomainError(f"a fork has exactly three twigs, got {len(twigs)}")
    if g.genus[center] != 0:
        raise DomainError(f"fork center {g.labels[center]} is not rational")
    twigs = tuple(tuple(t) for t in twigs)
    for t in twigs:
        _check_chain(g, t, "twig")
        if g.dot(t[-1], center) != 1 or any(g.dot(v, center) for v in t[:-1]):
            raise DomainError("each twig must meet the center once, at its last vertex")
    ordered = tuple(sorted(twigs, key=lambda t: _twig_order(g, t)))
    twig_bark = Bark()
    for t in ordered:
        twig_bark = twig_bark + bark_of_chain(g, t)
    value = fork_condition_value(g, center, ordered)
    vertices = sorted({center} | {v for t in ordered for v in t})
    contractible = is_negative_definite(g, vertices)
    admissible = g.self_int[center] <= -2
    full = None
    if admissible and contractible:
        coeffs = exact.solve(g.matrix(vertices), [g.log_degree(v) for v in vertices])
        full = Bark(tuple(vertices), tuple(coeffs))
    return ForkBark(center, ordered, twig_bark, value, value < 0, admissible, contractible, full)


def bark_total(g: SncGraph, cls: Classification | None = None) -> Bark:
    """Sum of barks over admissible rational rods, admissible forks and the remaining maximal twigs."""
    cls = classify(g) if cls is None else cls
    total = Bark()
    used: set[int] = set()
    for rod in cls.rods:
        if _rational_admissible(g, rod):
            total = total + bark_of_chain(g, rod)
            used.update(rod)
    in_forks: set[int] = set()
    for fork in cls.forks:
        in_forks.update(fork.vertices)
        if fork.admissible:
            fb = bark_of_fork(g, fork.center, fork.twigs)
            if fb.bark is not None:
                total = total + fb.bark
                used.update(fork.vertices)
    for twig in cls.maximal_twigs:
        if set(twig) & in_forks or not _rational_admissible(g, twig):
            continue
        total = total + bark_of_chain(g, twig)
        used.update(twig)
    return total


def almost_minimal_test(g: SncGraph, bark: Bark, curve_self: int,
                        curve_dot: Sequence[int], log_degree: int) -> tuple[Fraction, bool]:
    """Check one candidate curve M (not a component of D) against a bark.

    ``curve_dot[i]`` is M.D_i and ``log_degree`` is (K + D).M.  Returns the
    value (K + D - Bk).M and whether M passes: the value is non-negative, or
    Bk + M is not contractible.  Almost minimality needs this for every curve
    on the surface, which the graph alone cannot enumerate.
    """
    if len(curve_dot) != len(g):
        raise DomainError("curve intersection vector has the wrong length")
    value = Fraction(log_degree) - sum(
        (c * curve_dot[v] for v, c in zip(bark.support, bark.coefficients)), Fraction(0))
    if value >= 0:
        return value, True
    support = list(bark.support)
    m = g.matrix(support)
    for row, v in zip(m, support):
        row.append(curve_dot[v])
    m.append([curve_dot[v] for v in support] + [curve_self])
    return value, not exact.is_negative_definite(m)


# --- Zariski-Fujita verification --------------------------------------


@dataclass(frozen=True)
class ZariskiFujitaReport:
    negative_part_ok: bool
    nef_on_components: bool
    orthogonal: bool
    nef_note: str = "partial: checked against D-components only"

    @property
    def passed(self) -> bool:
        return self.negative_part_ok and self.nef_on_components and self.orthogonal

    def to_json(self) -> dict:
        return {"a": self.negative_part_ok, "b_partial": self.nef_on_components,
                "c": self.orthogonal, "b_note": self.nef_note}


def zariski_fujita_candidate(g: SncGraph, n: Sequence) -> list[Fraction]:
    """Intersection numbers H.D_i of H = (K + D) - N for N supported on the graph."""
    if len(n) != len(g):
        raise DomainError("N must have one coefficient per vertex")
    return [Fraction(g.log_degree(i)) - sum((Fraction(n[v]) * g.dot(v, i)
                                             for v in range(len(g))), Fraction(0))
            for i in range(len(g))]


def verify_zariski_fujita(g: SncGraph, h: Sequence, n: Sequence) -> ZariskiFujitaReport:
    """Check a proposed decomposition K + D = H + N on the components of D.

    ``h[i]`` is the intersection number H.D_i and ``n[i]`` the coefficient
    of D_i in N.  Flag ``b`` only looks at the components of D.
    """
    if len(h) != len(g) or len(n) != len(g):
        raise DomainError(f"expected vectors of length {len(g)}, got {len(h)} and {len(n)}")
    h = [Fraction(x) for x in h]
    n = [Fraction(x) for x in n]
    expected = zariski_fujita_candidate(g, n)
    if h != expected:
        raise DomainError("H + N does not restrict to K + D on the components of D")
    support = [i for i, c in enumerate(n) if c != 0]
    neg_ok = not support or (all(n[i] > 0 for i in support)
                             and is_negative_definite(g, support))
    orth = all(h[i] == 0 for i in support)
    nef = all(x >= 0 for x in h)
    return ZariskiFujitaReport(neg_ok, nef, orth)


def classification_report(g: SncGraph) -> dict:
    """JSON-ready summary of the classification and barks; fractions as ``p/q`` strings."""
    cls = classify(g)
    lab = g.labels

    def names(vs):
        return [lab[v] for v in vs]

    forks = []
    for f in cls.forks:
        fb = bark_of_fork(g, f.center, f.twigs)
        forks.append({
            "center": lab[f.center],
            "twigs": [names(t) for t in f.twigs],
            "condition_value": str(f.condition_value),
            "admissible": f.admissible,
            "contractible": fb.contractible,
            "twig_bark": fb.twig_bark.to_json(g),
        })
    chains = []
    for kind, items in (("rod", cls.rods), ("maximal_twig", cls.maximal_twigs)):
        for c in items:
            entry = {"kind": kind, "vertices": names(c),
                     "rational_admissible": _rational_admissible(g, c)}
            if entry["rational_admissible"]:
                entry["bark"] = bark_of_chain(g, c).to_json(g)
            chains.append(entry)
    return {
        "schema": "hirzcusp.classification/1",
        "isolated": names(cls.isolated),
        "tips": names(cls.tips),
        "branching": names(cls.branching),
        "branching_numbers": {lab[v]: g.branching(v) for v in range(len(g))},
        "chains": chains,
        "forks": forks,
        "rational_maximal_twigs": len(cls.rational_maximal_twigs(g)),
        "bark": bark_total(g, cls).to_json(g),
        "negative_definite": is_negative_definite(g),
        "arithmetic_genus": pa_of_divisor(g) if g.is_connected() else None,
    }


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)
