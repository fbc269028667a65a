import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rindep import _kernels
from rindep.generators import path

from conftest import small_graphs

numba_only = pytest.mark.skipif(not hasattr(_kernels, "bfs_numba"), reason="numba not installed")


@numba_only
@given(small_graphs(max_n=20), st.integers(-1, 6), st.data())
def test_bfs_backends_agree(g, radius, data):
    sources = np.array(data.draw(st.lists(st.integers(0, g.n - 1), max_size=4)), dtype=np.int64)
    allowed = np.array(data.draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n)), dtype=np.bool_)
    a = _kernels.bfs_numpy(g.indptr, g.indices, sources, radius, allowed)
    b = _kernels.bfs_numba(g.indptr, g.indices, sources, radius, allowed)
    assert np.array_equal(a, b)
    rows = np.arange(g.n, dtype=np.int64)
    assert np.array_equal(_kernels.bfs_rows_numpy(g.indptr, g.indices, rows, radius, allowed),
                          _kernels.bfs_rows_numba(g.indptr, g.indices, rows, radius, allowed))


@numba_only
@given(small_graphs(max_n=16), st.integers(1, 3), st.data())
def test_refine_backends_agree(g, r, data):
    X = np.array(data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=4, unique=True)),
                 dtype=np.int64)
    a = _kernels.refine_numpy(g.indptr, g.indices, X.copy(), r)
    b = _kernels.refine_numba(g.indptr, g.indices, X.copy(), r)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
    assert int(a[2]) == int(b[2]) and int(a[3]) == int(b[3])


def test_numpy_bfs_on_path():
    g = path(6)
    d = _kernels.bfs_numpy(g.indptr, g.indices, np.array([2]), 2, g.full_mask)
    assert d.tolist() == [2, 1, 0, 1, 2, -1]


def test_env_flag_selects_backend():
    env = dict(os.environ, RINDEP_BACKEND="numpy")
    out = subprocess.run([sys.executable, "-c", "import rindep; print(rindep.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_bad_backend_rejected():
    env = dict(os.environ, RINDEP_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", "import rindep"], env=env, capture_output=True, text=True)
    assert out.returncode != 0 and "RINDEP_BACKEND" in out.stderr
