"""Sparse exact kets and the generator-state families.

States are stored unnormalized with exact coefficients; the squared norm is
reported separately so no square roots ever enter the arithmetic.
"""

from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .combinatorics import enumerate_bounded_compositions
from .errors import DimsMismatch, RangeError, ShapeMismatch
from .gaussian import ONE, ZERO, GaussianRational


def check_dims(dims):
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2:
        raise RangeError(f"need at least two sites, got dims={dims}")
    if any(d < 2 for d in dims):
        raise RangeError(f"every local dimension must be >= 2, got dims={dims}")
    return dims


def _check_index(dims, index):
    index = tuple(int(i) for i in index)
    if len(index) != len(dims) or any(not 0 <= i < d for i, d in zip(index, dims)):
        raise ShapeMismatch(f"index {index} invalid for dims {dims}")
    return index


def format_index(index):
    if all(i < 10 for i in index):
        return "".join(str(i) for i in index)
    return ",".join(str(i) for i in index)


class Ket:
    """Unnormalized pure state: a sparse map multi-index -> GaussianRational.

    Zero coefficients are never stored. Iteration order over terms is
    ascending lexicographic on the multi-index.
    """

    __slots__ = ("dims", "_coeffs", "_order")

    def __init__(self, dims, coeffs=None):
        self.dims = check_dims(dims)
        store = {}
        for index, value in (coeffs or {}).items():
            index = _check_index(self.dims, index)
            value = GaussianRational.coerce(value)
            if value:
                store[index] = value
        self._coeffs = store
        self._order = None

    @classmethod
    def _trusted(cls, dims, store):
        ket = cls.__new__(cls)
        ket.dims = dims
        ket._coeffs = store
        ket._order = None
        return ket

    @classmethod
    def basis(cls, dims, index):
        return cls(dims, {tuple(index): ONE})

    @classmethod
    def uniform(cls, dims, indices):
        """0/1 superposition over the given multi-indices."""
        dims = check_dims(dims)
        store = {}
        for index in indices:
            store[_check_index(dims, index)] = ONE
        return cls._trusted(dims, store)

    @property
    def n(self):
        return len(self.dims)

    def indices(self):
        if self._order is None:
            self._order = sorted(self._coeffs)
        return list(self._order)

    def terms(self):
        return [(i, self._coeffs[i]) for i in self.indices()]

    def support(self):
        return frozenset(self._coeffs)

    def coeff(self, index):
        return self._coeffs.get(tuple(index), ZERO)

    __getitem__ = coeff

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __iter__(self):
        return iter(self.terms())

    def _check_same(self, other):
        if not isinstance(other, Ket):
            raise TypeError(f"expected Ket, got {type(other).__name__}")
        if other.dims != self.dims:
            raise DimsMismatch(f"dims {self.dims} vs {other.dims}")

    def __add__(self, other):
        self._check_same(other)
        store = dict(self._coeffs)
        for index, value in other._coeffs.items():
            total = store.get(index, ZERO) + value
            if total:
                store[index] = total
            else:
                store.pop(index, None)
        return Ket._trusted(self.dims, store)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        factor = GaussianRational.coerce(factor)
        if not factor:
            return Ket._trusted(self.dims, {})
        return Ket._trusted(self.dims, {i: v * factor for i, v in self._coeffs.items()})

    def __mul__(self, factor):
        try:
            return self.scale(factor)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def inner(self, other):
        """<self|other>, conjugate-linear in self."""
        if isinstance(other, NumericKet):
            return other.inner(self).conjugate()
        self._check_same(other)
        a, b = self._coeffs, other._coeffs
        if len(a) > len(b):
            total = ZERO
            for index, value in b.items():
                if index in a:
                    total = total + a[index].conjugate() * value
            return total
        total = ZERO
        for index, value in a.items():
            if index in b:
                total = total + value.conjugate() * b[index]
        return total

    def norm_sq(self):
        return sum((v.abs2() for v in self._coeffs.values()), Fraction(0))

    def is_integral(self):
        return all(v.re.denominator == 1 and v.im.denominator == 1 for v in self._coeffs.values())

    def to_numeric(self, normalize=False):
        store = {i: complex(v) for i, v in self._coeffs.items()}
        ket = NumericKet(self.dims, store)
        return ket.normalized() if normalize else ket

    def to_dense(self):
        out = np.zeros(self.dims, dtype=complex)
        for index, value in self._coeffs.items():
            out[index] = complex(value)
        return out.reshape(-1)

    def __eq__(self, other):
        if not isinstance(other, Ket):
            return NotImplemented
        return self.dims == other.dims and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.dims, frozenset(self._coeffs.items())))

    def __repr__(self):
        if not self._coeffs:
            return f"Ket(dims={self.dims}, 0)"
        parts = []
        for index, value in self.terms():
            label = f"|{format_index(index)}>"
            if value == 1:
                parts.append(label)
            elif value == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{value}{label}")
        return " + ".join(parts).replace("+ -", "- ")


class NumericKet:
    """Float-complex sparse ket, used only by the DFT scheme."""

    __slots__ = ("dims", "_coeffs")

    def __init__(self, dims, coeffs=None):
        self.dims = check_dims(dims)
        self._coeffs = {}
        for index, value in (coeffs or {}).items():
            index = _check_index(self.dims, index)
            value = complex(value)
            if value != 0:
                self._coeffs[index] = value

    @property
    def n(self):
        return len(self.dims)

    def indices(self):
        return sorted(self._coeffs)

    def terms(self):
        return [(i, self._coeffs[i]) for i in self.indices()]

    def support(self):
        return frozenset(self._coeffs)

    def coeff(self, index):
        return self._coeffs.get(tuple(index), 0j)

    __getitem__ = coeff

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def inner(self, other):
        if isinstance(other, Ket):
            other = other.to_numeric()
        if other.dims != self.dims:
            raise DimsMismatch(f"dims {self.dims} vs {other.dims}")
        return sum(
            (v.conjugate() * other._coeffs[i] for i, v in self._coeffs.items() if i in other._coeffs),
            0j,
        )

    def norm_sq(self):
        return sum(abs(v) ** 2 for v in self._coeffs.values())

    def normalized(self):
        nrm = self.norm_sq() ** 0.5
        return NumericKet(self.dims, {i: v / nrm for i, v in self._coeffs.items()})

    def scale(self, factor):
        return NumericKet(self.dims, {i: v * factor for i, v in self._coeffs.items()})

    def __add__(self, other):
        if isinstance(other, Ket):
            other = other.to_numeric()
        if other.dims != self.dims:
            raise DimsMismatch(f"dims {self.dims} vs {other.dims}")
        store = dict(self._coeffs)
        for i, v in other._coeffs.items():
            store[i] = store.get(i, 0j) + v
        return NumericKet(self.dims, store)

    def to_numeric(self, normalize=False):
        return self.normalized() if normalize else self

    def to_dense(self):
        out = np.zeros(self.dims, dtype=complex)
        for index, value in self._coeffs.items():
            out[index] = value
        return out.reshape(-1)

    def __repr__(self):
        body = " + ".join(f"({v:.6g})|{format_index(i)}>" for i, v in self.terms())
        return f"NumericKet({body or 0})"


def inner(a, b):
    return a.inner(b)


def norm_sq(a):
    return a.norm_sq()


def _multiset_permutations(values):
    """Distinct arrangements of a sorted multiset, ascending lexicographic."""
    values = sorted(values)
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    out = []
    prefix = []

    def rec(left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                rec(left - 1)
                prefix.pop()
                counts[v] += 1

    rec(len(values))
    return out


def dicke(n, k):
    """Unnormalized n-qubit Dicke state with k excitations."""
    if n < 2 or not 0 <= k <= n:
        raise RangeError(f"dicke needs n >= 2 and 0 <= k <= n, got n={n}, k={k}")
    indices = []
    for ones in combinations(range(n), k):
        idx = [0] * n
        for p in ones:
            idx[p] = 1
        indices.append(tuple(idx))
    return Ket.uniform((2,) * n, indices)


def generalized_dicke(n, d, occ):
    """Uniform sum over the distinct arrangements of {0^k0, 1^k1, ...}."""
    occ = tuple(occ)
    if n < 2 or d < 2:
        raise RangeError(f"need n >= 2 and d >= 2, got n={n}, d={d}")
    if len(occ) != d or any(k < 0 for k in occ) or sum(occ) != n:
        raise RangeError(f"occupation {occ} is not a {d}-part vector summing to {n}")
    multiset = [level for level, k in enumerate(occ) for _ in range(k)]
    return Ket.uniform((d,) * n, _multiset_permutations(multiset))


def g_state(n, d, k):
    """Uniform sum over all n-qudit indices whose entries add up to k."""
    if n < 2 or d < 2 or not 0 <= k <= n * (d - 1):
        raise RangeError(f"g_state needs 0 <= k <= n(d-1), got n={n}, d={d}, k={k}")
    return Ket.uniform((d,) * n, enumerate_bounded_compositions(n, k, (d - 1,) * n))


def script_g_state(n, d, k_sub, K, s, tail_occ):
    """Generator of the partially substituted family.

    Sums every index with exactly K entries in {0..k_sub+1} adding up to s,
    while the other n-K entries lie in {k_sub+2..d-1} with the occupation
    numbers ``tail_occ``.
    """
    tail_occ = tuple(tail_occ)
    if not tail_occ and K == n:
        # an empty tail is shorthand for all-zero occupations
        tail_occ = (0,) * (d - k_sub - 2)
    if n < 2 or d < 2 or not 0 <= k_sub <= d - 2:
        raise RangeError(f"invalid (n, d, k_sub) = ({n}, {d}, {k_sub})")
    if not 0 <= K <= n:
        raise RangeError(f"K must lie in [0, {n}], got {K}")
    cap = k_sub + 1
    if not 0 <= s <= K * cap:
        raise RangeError(f"s must lie in [0, {K * cap}], got {s}")
    if len(tail_occ) != d - k_sub - 2 or any(k < 0 for k in tail_occ) or sum(tail_occ) != n - K:
        raise RangeError(
            f"tail occupation {tail_occ} must have {d - k_sub - 2} parts summing to {n - K}"
        )
    heads = enumerate_bounded_compositions(K, s, (cap,) * K)
    tail_multiset = [k_sub + 2 + j for j, k in enumerate(tail_occ) for _ in range(k)]
    tails = _multiset_permutations(tail_multiset)
    indices = []
    for head_pos in combinations(range(n), K):
        tail_pos = [p for p in range(n) if p not in head_pos]
        for head in heads:
            for tail in tails:
                idx = [0] * n
                for p, v in zip(head_pos, head):
                    idx[p] = v
                for p, v in zip(tail_pos, tail):
                    idx[p] = v
                indices.append(tuple(idx))
    return Ket.uniform((d,) * n, indices)


def frak_g_state(dims, k):
    """Uniform sum over indices of a heterogeneous system with entry sum k."""
    dims = check_dims(dims)
    top = sum(d - 1 for d in dims)
    if not 0 <= k <= top:
        raise RangeError(f"k must lie in [0, {top}], got {k}")
    caps = tuple(d - 1 for d in dims)
    return Ket.uniform(dims, enumerate_bounded_compositions(len(dims), k, caps))


def product_state(dims, site_coeffs):
    """Tensor product of per-site coefficient lists."""
    dims = check_dims(dims)
    if len(site_coeffs) != len(dims):
        raise ShapeMismatch(f"need {len(dims)} site lists, got {len(site_coeffs)}")
    sites = []
    for j, (d, coeffs) in enumerate(zip(dims, site_coeffs)):
        coeffs = [GaussianRational.coerce(c) for c in coeffs]
        if len(coeffs) != d:
            raise ShapeMismatch(f"site {j + 1} needs {d} coefficients, got {len(coeffs)}")
        sites.append([(i, c) for i, c in enumerate(coeffs) if c])
    store = {}
    for combo in product(*sites):
        value = ONE
        for _, c in combo:
            value = value * c
        store[tuple(i for i, _ in combo)] = value
    return Ket._trusted(dims, store)


def ghz(n, d=2):
    return Ket.uniform((d,) * n, [(i,) * n for i in range(d)])
