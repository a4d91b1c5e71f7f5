"""Flattenings, exact and tolerant matrix rank, multiranks and GME checks."""

from dataclasses import dataclass, field
from itertools import combinations, product
from math import lcm

import numpy as np

from .errors import BadPartition, RangeError, ZeroState
from .gaussian import ZERO, GaussianRational
from .states import NumericKet


@dataclass
class FlatMatrix:
    """Dense matrix with the basis labels of its rows and columns."""

    entries: list
    row_labels: list = field(default_factory=list)
    col_labels: list = field(default_factory=list)

    @property
    def shape(self):
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def to_numpy(self):
        return np.array([[complex(v) for v in row] for row in self.entries], dtype=complex).reshape(
            self.shape
        )


def _check_partition(n, I):
    I = tuple(int(j) for j in I)
    if not 1 <= len(I) <= n - 1:
        raise BadPartition(f"partition {I} must hold between 1 and {n - 1} sites")
    if any(b <= a for a, b in zip(I, I[1:])):
        raise BadPartition(f"partition {I} must be strictly increasing")
    if I[0] < 1 or I[-1] > n:
        raise BadPartition(f"partition {I} has labels outside 1..{n}")
    return I


def flatten(psi, I):
    """Matricize psi with rows on the sites I (1-based) and columns on the rest."""
    dims = psi.dims
    n = len(dims)
    I = _check_partition(n, I)
    rows = [j - 1 for j in I]
    cols = [j for j in range(n) if j + 1 not in I]
    row_labels = list(product(*(range(dims[j]) for j in rows)))
    col_labels = list(product(*(range(dims[j]) for j in cols)))
    row_pos = {lab: r for r, lab in enumerate(row_labels)}
    col_pos = {lab: c for c, lab in enumerate(col_labels)}
    zero = 0j if isinstance(psi, NumericKet) else ZERO
    entries = [[zero] * len(col_labels) for _ in row_labels]
    for index, value in psi.terms():
        r = row_pos[tuple(index[j] for j in rows)]
        c = col_pos[tuple(index[j] for j in cols)]
        entries[r][c] = value
    return FlatMatrix(entries, row_labels, col_labels)


def _as_rows(m):
    if isinstance(m, FlatMatrix):
        return m.entries
    return m


def _bareiss_int(rows):
    # fraction-free elimination over Z; column skipping handles rank deficiency
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            a = row[col]
            rows[i] = [(p * row[j] - a * prow[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a, b):
    # a / b in Z[i], known to divide exactly
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    return (re // n, im // n)


def _bareiss_gauss(rows):
    rows = [r[:] for r in rows if any(v != (0, 0) for v in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = (1, 0)
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != (0, 0)), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            row = rows[i]
            a = row[col]
            rows[i] = [
                _gdiv_exact(_gsub(_gmul(p, row[j]), _gmul(a, prow[j])), prev) for j in range(ncols)
            ]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_exact(m):
    """Certified rank of a matrix of exact (Gaussian) rationals.

    Rows are first scaled to Gaussian integers, then reduced by fraction-free
    elimination, so every intermediate value is an exact integer.
    """
    rows = [[GaussianRational.coerce(v) for v in row] for row in _as_rows(m)]
    if not rows or not rows[0]:
        return 0
    real = all(v.im == 0 for row in rows for v in row)
    scaled = []
    for row in rows:
        den = 1
        for v in row:
            den = lcm(den, v.re.denominator, v.im.denominator)
        if real:
            scaled.append([int(v.re * den) for v in row])
        else:
            scaled.append([(int(v.re * den), int(v.im * den)) for v in row])
    return _bareiss_int(scaled) if real else _bareiss_gauss(scaled)


def rank_tolerant(m, rel_threshold=1e-9):
    """Numerical rank by partial-pivot elimination.

    A pivot counts when its magnitude exceeds rel_threshold times the largest
    absolute entry of the input.
    """
    if rel_threshold <= 0:
        raise RangeError(f"threshold must be positive, got {rel_threshold}")
    if isinstance(m, FlatMatrix):
        a = m.to_numpy()
    else:
        a = np.array(m, dtype=complex)
    if a.size == 0:
        return 0
    a = a.copy()
    scale = np.abs(a).max()
    if scale == 0:
        return 0
    tol = rel_threshold * scale
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank + int(np.argmax(np.abs(a[rank:, col])))
        if abs(a[piv, col]) <= tol:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        factors = a[rank + 1 :, col] / a[rank, col]
        a[rank + 1 :] -= np.outer(factors, a[rank])
        rank += 1
    return rank


def matrix_rank(m, exact=True, rel_threshold=1e-9):
    return rank_exact(m) if exact else rank_tolerant(m, rel_threshold)


def _rank_of(psi, I, rel_threshold):
    flat = flatten(psi, I)
    if isinstance(psi, NumericKet):
        return rank_tolerant(flat, rel_threshold)
    return rank_exact(flat)


def bipartitions(n, ell):
    """Site sets of size ell in lexicographic order, one per unordered cut.

    When 2 * ell == n the sets I and its complement describe the same cut,
    so only the one containing site 1 is kept.
    """
    if not 1 <= ell <= n // 2:
        raise RangeError(f"ell must lie in [1, {n // 2}], got {ell}")
    sets = combinations(range(1, n + 1), ell)
    if 2 * ell == n:
        return [I for I in sets if I[0] == 1]
    return list(sets)


def multirank(psi, ell, rel_threshold=1e-9):
    """Ranks of the flattenings with |I| = ell, in lexicographic order of I."""
    return [(I, _rank_of(psi, I, rel_threshold)) for I in bipartitions(len(psi.dims), ell)]


@dataclass
class MultirankReport:
    ranks: dict
    gme: bool

    def tuple_for(self, ell):
        return tuple(r for _, r in self.ranks[ell])

    def min_rank(self):
        return min(r for entries in self.ranks.values() for _, r in entries)


def is_gme(psi, rel_threshold=1e-9):
    """Every multirank at least two, i.e. no bipartition separates psi."""
    if not psi:
        raise ZeroState("the zero vector has no entanglement structure")
    n = len(psi.dims)
    ranks = {ell: multirank(psi, ell, rel_threshold) for ell in range(1, n // 2 + 1)}
    gme = all(r >= 2 for entries in ranks.values() for _, r in entries)
    return MultirankReport(ranks, gme)


def is_fully_product(psi, rel_threshold=1e-9):
    """True when every single-site flattening has rank one."""
    if not psi:
        raise ZeroState("the zero vector is not a state")
    n = len(psi.dims)
    return all(_rank_of(psi, (j,), rel_threshold) == 1 for j in range(1, n + 1))


def catalecticant(z, i):
    """Hankel matrix with entry (r, c) = z[r + c], of shape (n - i + 1) x (i + 1)."""
    z = [GaussianRational.coerce(v) for v in z]
    n = len(z) - 1
    if not 1 <= i <= n - 1:
        raise RangeError(f"catalecticant index must lie in [1, {n - 1}], got {i}")
    entries = [[z[r + c] for c in range(i + 1)] for r in range(n - i + 1)]
    return FlatMatrix(entries, list(range(n - i + 1)), list(range(i + 1)))
