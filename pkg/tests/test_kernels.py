from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from symchar import _kernels_py as pure
from symchar import kernels

compiled = pytest.importorskip("symchar._kernels", reason="compiled extension not built")


def _random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return p


def test_selected_backend_is_compiled_when_available():
    expected = "python" if os.environ.get("SYMCHAR_PURE_PYTHON") else "cython"
    assert kernels.BACKEND == expected


def test_env_var_forces_fallback():
    env = dict(os.environ, SYMCHAR_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from symchar import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("seed", range(5))
def test_permutation_level_parity(seed):
    rng = random.Random(seed)
    for n in range(1, 9):
        a, b = _random_perm(rng, n), _random_perm(rng, n)
        assert compiled.cycle_count(a) == pure.cycle_count(a)
        assert list(compiled.compose(a, b)) == list(pure.compose(a, b))
        assert list(compiled.inverse(a)) == list(pure.inverse(a))
        assert list(compiled.cycle_labels(a)) == list(pure.cycle_labels(a))
        ra, rb = compiled.nf_reduce(a, b)
        pa, pb = pure.nf_reduce(a, b)
        assert (list(ra), list(rb)) == (list(pa), list(pb))
        assert compiled.nf_check(a, b) == pure.nf_check(a, b)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumeration_parity(n):
    rng = random.Random(n)
    pi = _random_perm(rng, n)
    assert dict(compiled.kappa_pair_counts(pi)) == dict(pure.kappa_pair_counts(pi))
    assert list(compiled.cycle_product_counts(pi)) == list(pure.cycle_product_counts(pi))
    assert list(compiled.length_distribution(n)) == list(pure.length_distribution(n))


@pytest.mark.parametrize("K", [1, 2, 3, 4, 5])
def test_sweep_parity(K):
    assert tuple(compiled.normal_form_sweep(K)) == tuple(pure.normal_form_sweep(K))


def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    mod = runpy.run_path(str(script))
    assert mod["main"](["--repeat", "1", "--max-k", "3"]) == 0
    assert "speed-up" in capsys.readouterr().out
