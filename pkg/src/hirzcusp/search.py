"""Exhaustive enumeration of numerically admissible cuspidal configurations.

For a curve type (a, b) on F_e the genus formula turns a genus target into
an exact budget for the total delta invariant, so a census cell is a
partition problem over the (finite) set of multiplicity sequences with
bounded delta.  A cusp of multiplicity m sits on a fiber meeting C in b
points, hence m <= b; that prunes the sequence set per cell.

Output order is a contract: cells by ascending (e, a, b), and inside a cell
configurations by descending list of compact cusp forms.  Parallel runs
split the work per cell and first cusp and reassemble in that order.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Iterable, Iterator, Sequence

from hirzcusp.bounds import bound_report
from hirzcusp.divisors import CurveType, arithmetic_genus
from hirzcusp.errors import DomainError, InvalidSequenceError
from hirzcusp.germs import CuspidalConfig, MultiplicitySequence, from_compact

log = logging.getLogger(__name__)

__all__ = [
    "CSV_HEADER",
    "CensusRecord",
    "SearchSpec",
    "enumerate_configs",
    "enumerate_sequences",
    "read_checkpoint",
    "write_census",
]

CSV_HEADER = ("config", "g", "s", "bmy", "kodaira", "bound_ok")


def _compact_candidates(budget: int, cap: int, prefix: tuple[int, ...], top: int):
    yield prefix
    for m in range(min(top, cap), 1, -1):
        cost = m * (m - 1) // 2
        if cost <= budget:
            yield from _compact_candidates(budget - cost, cap, prefix + (m,), m)


@lru_cache(maxsize=256)
def _sequences(delta_budget: int, m_cap: int) -> tuple[MultiplicitySequence, ...]:
    found = []
    for compact in _compact_candidates(delta_budget, m_cap, (), m_cap):
        if not compact:
            continue
        try:
            found.append(from_compact(compact))
        except InvalidSequenceError:
            pass
    found.sort(key=lambda s: s.compact, reverse=True)
    return tuple(found)


def enumerate_sequences(delta_budget: int, m_cap: int) -> Iterator[MultiplicitySequence]:
    """Every valid sequence with delta <= budget and m_0 <= cap, by descending compact form."""
    if delta_budget < 1 or m_cap < 2:
        return iter(())
    return iter(_sequences(delta_budget, m_cap))


def _parse_range(value) -> tuple[int, int]:
    if isinstance(value, int):
        return value, value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return int(value[0]), int(value[1])
    text = str(value).strip()
    for sep in ("..", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    return int(text), int(text)


@dataclass(frozen=True)
class SearchSpec:
    e_range: tuple[int, int]
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    genus_filter: int | None = None
    max_delta_per_cusp: int | None = None
    require_bmy: bool = False
    output: str | None = None
    format: str = "jsonl"
    workers: int = 1

    def __post_init__(self):
        for name in ("e_range", "a_range", "b_range"):
            object.__setattr__(self, name, _parse_range(getattr(self, name)))
            lo, hi = getattr(self, name)
            if lo > hi:
                raise DomainError(f"{name} is empty: {lo}..{hi}")
        if self.e_range[0] < 0:
            raise DomainError("e must be >= 0")
        if self.a_range[0] < 0:
            raise DomainError("a must be >= 0")
        if self.b_range[0] < 1:
            raise DomainError("b must be >= 1")
        if self.genus_filter is not None and self.genus_filter < 0:
            raise DomainError("genus filter must be >= 0")
        if self.max_delta_per_cusp is not None and self.max_delta_per_cusp < 0:
            raise DomainError("max delta per cusp must be >= 0")
        if self.format not in ("jsonl", "csv"):
            raise DomainError(f"unknown output format {self.format!r}")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for e in range(self.e_range[0], self.e_range[1] + 1):
            for a in range(self.a_range[0], self.a_range[1] + 1):
                for b in range(self.b_range[0], self.b_range[1] + 1):
                    yield e, a, b

    @classmethod
    def from_mapping(cls, data: dict) -> SearchSpec:
        """Build from config-file keys: e, a, b (int, [lo, hi] or "lo..hi"), genus, ..."""
        aliases = {"e": "e_range", "a": "a_range", "b": "b_range", "genus": "genus_filter",
                   "max_delta": "max_delta_per_cusp"}
        kwargs = {}
        for key, value in data.items():
            name = aliases.get(key, key)
            if name not in cls.__dataclass_fields__:
                raise DomainError(f"unknown search setting {key!r}")
            kwargs[name] = value
        missing = [k for k in ("e_range", "a_range", "b_range") if k not in kwargs]
        if missing:
            raise DomainError(f"missing search settings: {', '.join(missing)}")
        return cls(**kwargs)


@dataclass(frozen=True)
class CensusRecord:
    config: str
    g: int
    s: int
    bmy: str
    kodaira: str
    bound_ok: bool
    bound: int
    bmy_left: int
    bmy_right: int

    @classmethod
    def from_config(cls, cfg: CuspidalConfig) -> CensusRecord:
        rep = bound_report(cfg)
        if not rep.bmy_applicable:
            bmy = "na"
        else:
            bmy = "pass" if rep.bmy_passed else "pruned"
        return cls(cfg.key, rep.g, rep.s, bmy, rep.kodaira_verdict.value, rep.satisfied,
                   rep.bound, rep.bmy_left, rep.bmy_right)

    @property
    def configuration(self) -> CuspidalConfig:
        return CuspidalConfig.from_key(self.config)

    def to_json(self) -> str:
        return json.dumps({
            "config": self.config, "g": self.g, "s": self.s, "bmy": self.bmy,
            "kodaira": self.kodaira, "bound_ok": self.bound_ok, "bound": self.bound,
            "bmy_left": self.bmy_left, "bmy_right": self.bmy_right})

    @classmethod
    def from_json(cls, line: str) -> CensusRecord:
        return cls(**json.loads(line))

    def csv_row(self) -> list:
        return [self.config, self.g, self.s, self.bmy, self.kodaira,
                "true" if self.bound_ok else "false"]

    @classmethod
    def from_csv_row(cls, row: Sequence[str]) -> CensusRecord:
        """Columns not stored in CSV are recomputed from the configuration and cross-checked."""
        rec = cls.from_config(CuspidalConfig.from_key(row[0]))
        given = (int(row[1]), int(row[2]), row[3], row[4], row[5] == "true")
        if given != (rec.g, rec.s, rec.bmy, rec.kodaira, rec.bound_ok):
            raise DomainError(f"CSV row disagrees with its configuration: {list(row)}")
        return rec


def _multisets(seqs: Sequence[MultiplicitySequence], start: int, budget: int, exact: bool,
               prefix: list[MultiplicitySequence]) -> Iterator[tuple[MultiplicitySequence, ...]]:
    if prefix and (budget == 0 or not exact):
        yield tuple(prefix)
    for k in range(start, len(seqs)):
        d = seqs[k].delta
        if d <= budget:
            prefix.append(seqs[k])
            yield from _multisets(seqs, k, budget - d, exact, prefix)
            prefix.pop()


@dataclass(frozen=True)
class _Unit:
    e: int
    a: int
    b: int
    first: int | None  # index of the first (largest) cusp; None for the smooth config
    budget: int
    exact: bool
    seqs: tuple[MultiplicitySequence, ...] = field(repr=False)


def _units(spec: SearchSpec) -> Iterator[_Unit]:
    for e, a, b in spec.cells():
        smooth = arithmetic_genus(CurveType.of(e, a, b))
        if spec.genus_filter is not None:
            budget, exact = smooth - spec.genus_filter, True
        else:
            budget, exact = smooth, False
        if budget < 0:
            continue
        cap = budget if spec.max_delta_per_cusp is None else min(budget, spec.max_delta_per_cusp)
        seqs = tuple(enumerate_sequences(cap, b))
        for k in range(len(seqs)):
            if seqs[k].delta <= budget:
                yield _Unit(e, a, b, k, budget, exact, seqs)
        if budget == 0 or not exact:
            yield _Unit(e, a, b, None, budget, exact, seqs)


def _run_unit(unit: _Unit, require_bmy: bool) -> list[CensusRecord]:
    curve = CurveType.of(unit.e, unit.a, unit.b)
    if unit.first is None:
        groups: Iterable[tuple] = [()]
    else:
        head = unit.seqs[unit.first]
        groups = ((head,) + rest for rest in _tail(unit, head))
    out = []
    for cusps in groups:
        rec = CensusRecord.from_config(CuspidalConfig(curve, cusps))
        if require_bmy and rec.bmy == "pruned":
            continue
        out.append((tuple(c.compact for c in cusps), rec))
    out.sort(key=lambda x: x[0], reverse=True)
    return [rec for _, rec in out]


def _tail(unit: _Unit, head: MultiplicitySequence) -> Iterator[tuple]:
    rest = unit.budget - head.delta
    if not unit.exact or rest == 0:
        yield ()
    for ms in _multisets(unit.seqs, unit.first, rest, unit.exact, []):
        yield ms


def enumerate_configs(spec: SearchSpec) -> Iterator[CensusRecord]:
    """Census records for every cell of a search, in canonical order."""
    units = list(_units(spec))
    if spec.workers == 1:
        for u in units:
            yield from _run_unit(u, spec.require_bmy)
        return
    with ThreadPoolExecutor(max_workers=spec.workers) as pool:
        for batch in pool.map(lambda u: _run_unit(u, spec.require_bmy), units):
            yield from batch


def read_checkpoint(path: str | os.PathLike) -> str | None:
    try:
        with open(path) as fh:
            key = fh.read().strip()
    except FileNotFoundError:
        return None
    return key or None


def _write_checkpoint(path, key: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(key + "\n")
    os.replace(tmp, path)


def write_census(records: Iterable[CensusRecord], stream: IO[str], fmt: str = "jsonl", *,
                 checkpoint: str | os.PathLike | None = None, limit: int | None = None) -> int:
    """Stream records out; returns the number written.

    With a checkpoint path, records up to and including the stored key are
    skipped and the key is updated after every record written.  The CSV
    header is written only on a fresh start.
    """
    resume_key = read_checkpoint(checkpoint) if checkpoint else None
    writer = csv.writer(stream, lineterminator="\n") if fmt == "csv" else None
    if writer is not None and resume_key is None:
        writer.writerow(CSV_HEADER)
    skipping = resume_key is not None
    written = 0
    for rec in records:
        if skipping:
            if rec.config == resume_key:
                skipping = False
            continue
        if limit is not None and written >= limit:
            break
        if writer is not None:
            writer.writerow(rec.csv_row())
        else:
            stream.write(rec.to_json() + "\n")
        written += 1
        if checkpoint:
            stream.flush()
            _write_checkpoint(checkpoint, rec.config)
    if skipping:
        raise DomainError(f"checkpoint key {resume_key!r} does not occur in this census")
    return written


def census_text(spec: SearchSpec) -> str:
    buf = io.StringIO()
    write_census(enumerate_configs(spec), buf, spec.format)
    return buf.getvalue()
