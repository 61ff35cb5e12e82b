"""Independent reference computations used only by the tests.

None of these import the code paths they check.
"""

from __future__ import annotations

import itertools
from math import gcd


def euclid_multiplicities(n: int, betas: list[int]) -> list[int]:
    """Full multiplicity sequence of the branch x = t^n, y = sum t^beta_k.

    Each characteristic exponent contributes the quotients of the Euclidean
    algorithm on (beta_k - beta_{k-1}, e_{k-1}).
    """
    out: list[int] = []
    e, prev = n, 0
    for beta in betas:
        a, b = beta - prev, e
        while b:
            q, r = divmod(a, b)
            out.extend([b] * q)
            a, b = b, r
        e = a
        prev = beta
    return out


def semigroup_gaps(n: int, betas: list[int]) -> int:
    """Number of gaps of the value semigroup of the branch (equals its delta invariant)."""
    gens = [n, betas[0]]
    es = [n, gcd(n, betas[0])]
    for k in range(1, len(betas)):
        nk = es[k - 1] // es[k]
        gens.append(nk * gens[k] + betas[k] - betas[k - 1])
        es.append(gcd(es[k], betas[k]))
    limit = sum(gens) * n + 1
    member = [False] * limit
    member[0] = True
    for x in range(1, limit):
        member[x] = any(x >= g and member[x - g] for g in gens)
    return sum(1 for x in member if not x)


def characteristic_sequences(max_len: int):
    """All Puiseux characteristics whose multiplicity sequence has length <= max_len."""
    results = []

    def extend(n, betas, e):
        seq = euclid_multiplicities(n, betas)
        if len(seq) > max_len:
            return
        if e == 1:
            results.append((n, tuple(betas), tuple(seq)))
            return
        prev = betas[-1] if betas else 0
        lo = n + 1 if not betas else 1
        for d in range(lo, e * (max_len + 1) + 1):
            if d % e == 0:
                continue
            extend(n, betas + [prev + d], gcd(e, d))

    for n in range(2, max_len + 1):
        extend(n, [], n)
    return results


def mult_seq_length(seq) -> int:
    return len(seq)


def brute_force_sequences(max_len: int, max_value: int, delta_budget: int):
    """Non-increasing tuples ending in 1, filtered by delta only (validity left to the caller)."""
    for length in range(2, max_len + 1):
        for combo in itertools.combinations_with_replacement(range(max_value, 0, -1), length):
            if combo[0] < 2 or combo[-1] != 1:
                continue
            if sum(m * (m - 1) // 2 for m in combo) <= delta_budget:
                yield combo


def case_table(e: int, a: int, b: int, g: int, s: int) -> str:
    """Log Kodaira verdicts licensed by the classification theorem, written out by cases."""
    hypotheses = b > 2 and a > 0 and a > 2 - b * e / 2
    if not hypotheses:
        return "Unknown"
    if g > 0:
        return "Two"
    if g == 0 and s >= 3:
        return "Two"
    if g == 0 and s >= 2:
        return "AtLeastZero"
    return "Unknown"
