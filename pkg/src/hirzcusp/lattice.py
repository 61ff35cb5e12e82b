"""Intersection lattice of the minimal embedded resolution of a cuspidal curve.

Classes on the blown-up surface V are written in the orthogonal basis
``L, M, E_1, ..., E_t`` where ``E_i`` is the *total* transform of the i-th
exceptional curve: ``E_i.E_j = -delta_ij`` and ``E_i.L = E_i.M = 0``.  Strict
transforms are derived from the proximity structure of each cusp.

Index convention: the exceptional curve ``E_{k+1}`` (0-based position ``k``
inside its cusp block) is created by blowing up ``p_k``, which has
multiplicity ``m_k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from hirzcusp.divisors import DivisorClass, SurfaceMismatchError, canonical_class, pairing
from hirzcusp.germs import CuspidalConfig
from hirzcusp.snc import SncGraph

__all__ = [
    "LatticeClass",
    "ResolutionLattice",
    "build",
    "dual_graph",
    "log_class_squared",
    "log_class_squared_direct",
    "resolution_json",
]

SCHEMA = "hirzcusp.resolution/1"


@dataclass(frozen=True)
class LatticeClass:
    base: DivisorClass
    coeffs: tuple[int, ...]

    def _check(self, other: LatticeClass):
        if len(other.coeffs) != len(self.coeffs):
            raise SurfaceMismatchError("classes on different blowups")

    def __add__(self, other: LatticeClass) -> LatticeClass:
        self._check(other)
        return LatticeClass(self.base + other.base,
                            tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: LatticeClass) -> LatticeClass:
        self._check(other)
        return LatticeClass(self.base - other.base,
                            tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, k: int) -> LatticeClass:
        return LatticeClass(self.base * k, tuple(k * x for x in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: LatticeClass) -> int:
        self._check(other)
        return pairing(self.base, other.base) - sum(
            x * y for x, y in zip(self.coeffs, other.coeffs))

    def to_json(self) -> dict:
        return {"a": self.base.a, "b": self.base.b, "E": list(self.coeffs)}


def _unit(e: int, t: int, i: int, value: int = 1) -> LatticeClass:
    coeffs = [0] * t
    coeffs[i] = value
    return LatticeClass(DivisorClass(e), tuple(coeffs))


class ResolutionLattice:
    """Named classes of the minimal embedded resolution of ``config``.

    ``offsets[j]`` is the global index of the first exceptional curve of the
    j-th cusp (in the config's canonical order).
    """

    def __init__(self, config: CuspidalConfig):
        config.require_feasible()
        self.config = config
        e = config.e
        self.offsets: list[int] = []
        t = 0
        for cusp in config.cusps:
            self.offsets.append(t)
            t += cusp.length
        self.total_blowups = t
        zero = LatticeClass(DivisorClass(e), (0,) * t)
        self.zero = zero

        self.E = [_unit(e, t, i) for i in range(t)]
        strict = []
        mults = [0] * t
        for cusp, off in zip(config.cusps, self.offsets):
            for k, m in enumerate(cusp.entries):
                coeffs = [0] * t
                coeffs[off + k] = 1
                for j in cusp.proximate_points(k):
                    coeffs[off + j] = -1
                strict.append(LatticeClass(DivisorClass(e), tuple(coeffs)))
                mults[off + k] = m
        self.E_prime = strict
        self.multiplicities = tuple(mults)

        curve = config.curve.divisor
        self.curve_class = LatticeClass(curve, (0,) * t)
        self.C_tilde = LatticeClass(curve, tuple(-m for m in mults))
        self.K_V = LatticeClass(canonical_class(e), (1,) * t)
        self.D = self.C_tilde
        for x in strict:
            self.D = self.D + x

    @cached_property
    def log_class(self) -> LatticeClass:
        """D + K_V expanded as (a+e-2)L + (b-2)M + sum E'_i - sum (m_{i-1}-1) E_i."""
        cfg = self.config
        total = LatticeClass(DivisorClass(cfg.e, cfg.a + cfg.e - 2, cfg.b - 2),
                             (0,) * self.total_blowups)
        for x in self.E_prime:
            total = total + x
        return total - LatticeClass(DivisorClass(cfg.e),
                                    tuple(m - 1 for m in self.multiplicities))

    def cusp_indices(self, j: int) -> range:
        off = self.offsets[j]
        return range(off, off + self.config.cusps[j].length)

    def named_classes(self) -> dict[str, LatticeClass]:
        out = {"C_tilde": self.C_tilde, "K_V": self.K_V, "D": self.D,
               "log_class": self.log_class}
        for i, x in enumerate(self.E):
            out[f"E_{i + 1}"] = x
        for i, x in enumerate(self.E_prime):
            out[f"E_prime_{i + 1}"] = x
        return out


def build(cfg: CuspidalConfig) -> ResolutionLattice:
    return ResolutionLattice(cfg)


def log_class_squared(lat: ResolutionLattice) -> int:
    """(K_V + D)^2 from the expanded form of D + K_V."""
    x = lat.log_class
    return x.dot(x)


def log_class_squared_direct(lat: ResolutionLattice) -> int:
    """(K_V + D)^2 computed from K_V and D separately."""
    k, d = lat.K_V, lat.D
    return k.dot(k) + 2 * k.dot(d) + d.dot(d)


def dual_graph(lat: ResolutionLattice) -> SncGraph:
    """Weighted dual graph of D: vertex 0 is the strict transform of C."""
    vertices = [(lat.C_tilde.dot(lat.C_tilde), lat.config.genus, "C")]
    curves = [lat.C_tilde]
    for i, x in enumerate(lat.E_prime):
        vertices.append((x.dot(x), 0, f"E{i + 1}"))
        curves.append(x)
    edges = []
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            # blocks of distinct cusps are orthogonal
            if i > 0 and j > 0 and _cusp_of(lat, i - 1) != _cusp_of(lat, j - 1):
                continue
            v = curves[i].dot(curves[j])
            if v > 0:
                edges.append((i, j, v))
    return SncGraph(vertices, edges)


def _cusp_of(lat: ResolutionLattice, i: int) -> int:
    j = 0
    while j + 1 < len(lat.offsets) and lat.offsets[j + 1] <= i:
        j += 1
    return j


def resolution_json(lat: ResolutionLattice) -> dict:
    return {
        "schema": SCHEMA,
        "config": lat.config.key,
        "genus": lat.config.genus,
        "total_blowups": lat.total_blowups,
        "log_class_squared": log_class_squared(lat),
        "classes": {k: v.to_json() for k, v in lat.named_classes().items()},
        "graph": dual_graph(lat).to_json(),
    }


def dumps(lat: ResolutionLattice) -> str:
    return json.dumps(resolution_json(lat), indent=2)
