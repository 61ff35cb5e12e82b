import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hirzcusp.germs import CuspidalConfig  # noqa: E402
from hirzcusp.search import enumerate_sequences  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def random_configs(count: int, seed: int = 20261014, max_blowups: int = 12):
    """Feasible configurations with at most ``max_blowups`` exceptional curves in total."""
    rng = random.Random(seed)
    pool = [s for s in enumerate_sequences(12, 6) if s.length <= max_blowups]
    out = []
    while len(out) < count:
        cusps, t = [], 0
        for _ in range(rng.randint(0, 4)):
            s = rng.choice(pool)
            if t + s.length <= max_blowups:
                cusps.append(s)
                t += s.length
        e = rng.randint(0, 4)
        b = max([c.multiplicity for c in cusps] + [1]) + rng.randint(0, 2)
        a = 0
        while CuspidalConfig.of(e, a, b, cusps).genus < 0:
            a += 1
        out.append(CuspidalConfig.of(e, a + rng.randint(0, 2), b, cusps))
    return out


@pytest.fixture(scope="session")
def configs200():
    return random_configs(200)


@pytest.fixture
def record_acceptance():
    def record(number: int, ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
