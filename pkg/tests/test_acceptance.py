"""Acceptance suite: one pass/fail line per criterion, at full scale."""

from __future__ import annotations

import time

import pytest

from conftest import ACCEPTANCE_KEY
from symchar.acceptance import REGISTRY


@pytest.mark.parametrize("crit", sorted(REGISTRY, key=lambda c: c.number), ids=lambda c: f"c{c.number:02d}")
def test_criterion(crit, request):
    t0 = time.perf_counter()
    res = crit.run(workers=2)
    elapsed = time.perf_counter() - t0
    line = f"criterion {crit.number:>2} {'PASS' if res.ok else 'FAIL'}  {crit.name}  ({elapsed:.2f}s): {res.detail}"
    print(line)
    request.config.stash.setdefault(ACCEPTANCE_KEY, []).append(line)
    assert res.ok, res.detail


def test_registry_is_complete():
    assert sorted(c.number for c in REGISTRY) == list(range(1, 12))

