"""Dense linear-algebra primitives and index-selection operators.

Conventions used throughout the library:

* Matrices and vectors are real-valued float64 ``numpy`` arrays, row-major
  (numpy's default C order).
* An *index set* is a 1-d ``int64`` array of distinct 1-based indices into
  ``{1..N}``, stored sorted ascending.  Canonical ordering makes set
  equality plain ``numpy.array_equal``.
* An *index multiset* is a 1-d ``int64`` array where duplicates are allowed
  (e.g. the concatenation of several nodes' local support estimates).
* All tie-breaks select the smaller index first, so every selection
  operator is deterministic across runs and platforms.
"""

import numpy as np
from scipy.linalg import solve_triangular

from .errors import IndexOutOfRangeError, InsufficientDistinctError, RankDeficientError

# Relative threshold on the triangular factor's diagonal below which the
# selected columns are declared rank deficient.
RANK_TOL = 1e-10


def as_index_set(indices):
    """Canonicalize ``indices`` into a sorted 1-based index set array.

    Raises ValueError if entries repeat or are < 1.
    """
    s = np.unique(np.asarray(indices, dtype=np.int64))
    if s.size != len(np.atleast_1d(indices)):
        raise ValueError("index set entries must be distinct")
    if s.size and s[0] < 1:
        raise IndexOutOfRangeError("index sets are 1-based; got index < 1")
    return s


def lstsq(A, y):
    """Least-squares coefficients of ``y`` against the columns of ``A``.

    Solves ``min_c ||y - A c||_2`` through a reduced QR factorization
    (never by inverting the Gram matrix).

    Parameters
    ----------
    A : ndarray, shape (M, k)
        Column dictionary, k <= M.
    y : ndarray, shape (M,)

    Returns
    -------
    c : ndarray, shape (k,)

    Raises
    ------
    RankDeficientError
        If the smallest diagonal magnitude of the triangular factor falls
        below ``RANK_TOL`` relative to the largest.
    """
    A = np.asarray(A, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if A.ndim != 2:
        raise ValueError("A must be 2-d")
    m, k = A.shape
    if k == 0:
        return np.zeros(0)
    if k > m:
        raise ValueError(f"need k <= M, got {k} columns and {m} rows")
    q, r = np.linalg.qr(A, mode="reduced")
    diag = np.abs(np.diag(r))
    dmax = diag.max()
    if dmax == 0.0 or diag.min() < RANK_TOL * dmax:
        raise RankDeficientError(
            f"effective rank < {k} (diag ratio {diag.min():.3e} / {dmax:.3e})"
        )
    return solve_triangular(r, q.T @ y, lower=False)


def resid(y, A):
    """Residual of ``y`` after projecting onto the column space of ``A``.

    Returns ``y - A @ lstsq(A, y)``; propagates RankDeficientError.
    """
    A = np.asarray(A, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if A.shape[1] == 0:
        return y.copy()
    return y - A @ lstsq(A, y)


def max_ind(v, K):
    """1-based indices of the ``K`` largest-magnitude entries of ``v``.

    Ties are broken in favor of the smaller index, so the result is a
    deterministic function of the input.
    """
    v = np.asarray(v, dtype=np.float64)
    if K > v.size:
        raise ValueError(f"K={K} exceeds vector length {v.size}")
    # stable sort on descending magnitude keeps equal entries in index order
    order = np.argsort(-np.abs(v), kind="stable")
    return np.sort(order[:K].astype(np.int64) + 1)


def max_occ(m, K):
    """The ``K`` values of multiset ``m`` with the highest multiplicity.

    Ties are broken in favor of the smaller value.

    Raises
    ------
    InsufficientDistinctError
        If ``m`` holds fewer than ``K`` distinct values.
    """
    m = np.asarray(m, dtype=np.int64)
    values, counts = np.unique(m, return_counts=True)  # values ascend
    if values.size < K:
        raise InsufficientDistinctError(
            f"need {K} distinct values, multiset has {values.size}"
        )
    order = np.argsort(-counts, kind="stable")
    return np.sort(values[order[:K]])


def column_submatrix(A, S):
    """Columns of ``A`` selected by the 1-based index set ``S``, in order."""
    A = np.asarray(A)
    S = np.asarray(S, dtype=np.int64)
    if S.size and (S.min() < 1 or S.max() > A.shape[1]):
        raise IndexOutOfRangeError(
            f"indices must lie in [1, {A.shape[1]}], got [{S.min()}, {S.max()}]"
        )
    return A[:, S - 1]


def correlate(A, r):
    """Entrywise magnitudes of the correlations ``|A.T @ r|``."""
    A = np.asarray(A, dtype=np.float64)
    r = np.asarray(r, dtype=np.float64)
    return np.abs(A.T @ r)
