"""The compiled kernel and the Python fallback must agree everywhere."""

import itertools
import os
import subprocess
import sys

import pytest

from mahonian import _core, _pykernel

kernel = pytest.importorskip("mahonian._kernel")


def _valid(family, stat, sign, boundary, n):
    if family != 0 and (sign == 1 or stat == _pykernel.STATS.index("len-a")):
        return False
    return not (boundary == 2 and n < 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_full_parity(n):
    combos = itertools.product(range(5), range(len(_pykernel.STATS)), range(4), range(3), range(3))
    checked = 0
    for fam, stat, sign, restrict, boundary in combos:
        if not _valid(fam, stat, sign, boundary, n):
            continue
        args = (n, fam, stat, sign, restrict, boundary)
        assert kernel.histogram(*args) == _pykernel.histogram(*args), args
        checked += 1
    assert checked > 1000


@pytest.mark.parametrize("fam", range(5))
def test_chunk_parity(fam):
    from mahonian.weyl import chunk_keys
    n = 4
    for first in chunk_keys(_pykernel.FAMILIES[fam], n):
        for stat in (4, 10, 8):
            args = (n, fam, stat, 2 if fam else 0, 1, 0, first)
            assert kernel.histogram(*args) == _pykernel.histogram(*args)


@pytest.mark.slow
def test_parity_at_n5_for_main_statistics():
    for fam in range(5):
        for stat in ("maj-nat", "fmaj", "len-b", "inv-spec"):
            s = _pykernel.STATS.index(stat)
            for restrict in range(3):
                args = (5, fam, s, 2 if fam else 0, restrict)
                assert kernel.histogram(*args) == _pykernel.histogram(*args)


def test_kernel_rejects_bad_n():
    with pytest.raises(ValueError):
        kernel.histogram(0, 0, 4, 0, 0)
    with pytest.raises(ValueError):
        kernel.histogram(21, 0, 4, 0, 0)


def test_backend_selection():
    assert _core.BACKEND == ("python" if os.environ.get("MAHONIAN_PURE_PYTHON") else "cython")
    code = "from mahonian import _core; print(_core.BACKEND)"
    env = dict(os.environ, MAHONIAN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
