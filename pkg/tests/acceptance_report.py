"""Collects one status line per acceptance criterion."""

from __future__ import annotations

import time
from contextlib import contextmanager

LINES = []


@contextmanager
def criterion(number: int, title: str, budget: float):
    """Time the block; record PASS only if it finished within budget
    without an assertion failing."""
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        within = dt < budget
        status = "PASS" if ok and within else "FAIL"
        note = "" if within else " (over budget)"
        line = "criterion %2d: %s  %-58s %7.2fs / %gs%s" % (number, status, title, dt, budget, note)
        LINES.append(line)
        print(line)
    assert within, line
