"""Product-state families from (modified) Veronese and Segre-Veronese maps.

Every construction evaluates a polynomial coordinate map at a handful of
points. The images are product states whose span is also spanned by a
family of 0/1 "generator" states with disjoint supports; the product
generators seed the orthogonal decomposition in ``decompose``.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, prod

from .combinatorics import count_distinct_monomials, enumerate_occupations
from .errors import DimsMismatch, ExhaustedRetries, RangeError, RankDeficient, SpecMismatch
from .multirank import rank_exact
from .states import (
    check_dims,
    dicke,
    format_index,
    frak_g_state,
    g_state,
    generalized_dicke,
    product_state,
    script_g_state,
)

MAX_ATTEMPTS = 32


class Family(Enum):
    QUBIT_DICKE = "QubitDicke"
    QUDIT_VERONESE = "QuditVeronese"
    QUDIT_GAMMA = "QuditGamma"
    QUDIT_KSUB = "QuditKSub"
    HETEROGENEOUS = "Heterogeneous"


@dataclass(frozen=True)
class EmbedSpec:
    """Local dimensions plus the number of substituted coordinates.

    Homogeneous systems default to full substitution (k_sub = d - 2);
    heterogeneous systems always use full substitution and keep k_sub None.
    """

    dims: tuple
    k_sub: int = None

    def __post_init__(self):
        dims = check_dims(self.dims)
        object.__setattr__(self, "dims", dims)
        if len(set(dims)) == 1:
            d = dims[0]
            k = d - 2 if self.k_sub is None else int(self.k_sub)
            if not 0 <= k <= d - 2:
                raise RangeError(f"k_sub must lie in [0, {d - 2}] for d={d}, got {k}")
            object.__setattr__(self, "k_sub", k)
        elif self.k_sub is not None:
            raise SpecMismatch("k_sub applies to homogeneous dims only")

    @property
    def n(self):
        return len(self.dims)

    @property
    def homogeneous(self):
        return self.k_sub is not None

    @property
    def d(self):
        if not self.homogeneous:
            raise SpecMismatch(f"dims {self.dims} are not homogeneous")
        return self.dims[0]

    @property
    def family(self):
        if not self.homogeneous:
            return Family.HETEROGENEOUS
        d, k = self.dims[0], self.k_sub
        if d == 2:
            return Family.QUBIT_DICKE
        if k == 0:
            return Family.QUDIT_VERONESE
        if k == d - 2:
            return Family.QUDIT_GAMMA
        return Family.QUDIT_KSUB

    @property
    def num_free(self):
        """Unsubstituted coordinates per site."""
        return self.dims[0] - self.k_sub - 2 if self.homogeneous else 0

    @property
    def total_dim(self):
        return prod(self.dims)

    @property
    def nupb_size(self):
        return nupb_size(self)


@dataclass(frozen=True)
class EvaluationPoint:
    x: Fraction
    free_coords: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "free_coords", tuple(Fraction(c) for c in self.free_coords))


@dataclass
class NUPB:
    spec: EmbedSpec
    points: list
    members: list = field(default_factory=list)


def nupb_size(spec):
    n = spec.n
    fam = spec.family
    if fam is Family.QUBIT_DICKE:
        return n + 1
    if fam is Family.QUDIT_VERONESE:
        d = spec.d
        return comb(n + d - 1, d - 1)
    if fam is Family.QUDIT_GAMMA:
        return n * (spec.d - 1) + 1
    if fam is Family.QUDIT_KSUB:
        return count_distinct_monomials(n, spec.d, spec.k_sub)
    return sum(d - 1 for d in spec.dims) + 1


def site_coefficients(spec, j, p):
    """Coefficients of the site-j factor at point p (sites are 0-based here)."""
    if not 0 <= j < spec.n:
        raise SpecMismatch(f"site {j} outside 0..{spec.n - 1}")
    if len(p.free_coords) != spec.num_free:
        raise SpecMismatch(
            f"point carries {len(p.free_coords)} free coordinates, spec needs {spec.num_free}"
        )
    if not spec.homogeneous:
        return [p.x**i for i in range(spec.dims[j])]
    return [p.x**i for i in range(spec.k_sub + 2)] + list(p.free_coords)


def span_rank(kets):
    """Rank of the coefficient matrix with the kets as rows."""
    kets = list(kets)
    if not kets:
        return 0
    dims = kets[0].dims
    if any(k.dims != dims for k in kets):
        raise DimsMismatch("kets have different dims")
    support = sorted(set().union(*(k.support() for k in kets)))
    if not support:
        return 0
    rows = [[k.coeff(i) for i in support] for k in kets]
    return rank_exact(rows)


def build_nupb(spec, points):
    size = nupb_size(spec)
    points = list(points)
    if len(points) != size:
        raise RangeError(f"need {size} points, got {len(points)}")
    members = [
        product_state(spec.dims, [site_coefficients(spec, j, p) for j in range(spec.n)])
        for p in points
    ]
    rank = span_rank(members)
    if rank < size:
        seen = {}
        colliding = []
        for p in points:
            if p in seen:
                colliding.append(p)
            seen[p] = True
        raise RankDeficient(
            f"nUPB members span rank {rank} < {size}", points=colliding or points
        )
    return NUPB(spec, points, members)


def _primes(count, skip):
    from sympy import prime

    return [prime(skip + i + 1) for i in range(count)]


def _points_for(spec, x_values, prime_offset):
    t = spec.num_free
    primes = _primes(len(x_values) * t, prime_offset) if t else []
    return [
        EvaluationPoint(x, primes[l * t : (l + 1) * t]) for l, x in enumerate(x_values)
    ]


def choose_generic_points(spec, seed=0):
    """Deterministic points: x = 0, 1, 2, ... and free coordinates on distinct primes.

    The prime offset moves with the seed and with every failed attempt; each
    candidate set is accepted only once the nUPB span rank is certified.
    """
    size = nupb_size(spec)
    x_values = list(range(size))
    for attempt in range(MAX_ATTEMPTS):
        offset = (seed + attempt) * size * max(spec.num_free, 1)
        points = _points_for(spec, x_values, offset)
        try:
            build_nupb(spec, points)
        except RankDeficient:
            continue
        return points
    raise ExhaustedRetries(f"no generic point set found after {MAX_ATTEMPTS} attempts")


def fresh_points(spec, count, avoid=(), seed=0):
    """Points unused by ``avoid``, for testing orthogonality against new nUPB members."""
    used = {p.x for p in avoid}
    start = max(used, default=Fraction(-1)) + 1
    x_values = [start + i for i in range(count)]
    used_primes = max((max(p.free_coords, default=0) for p in avoid), default=0)
    offset = 0
    if spec.num_free:
        from sympy import primepi

        offset = int(primepi(int(used_primes))) + seed * count * spec.num_free
    return _points_for(spec, x_values, offset)


def _qubit_generators(spec):
    n = spec.n
    return [
        (dicke(n, k), "product" if k in (0, n) else "gme", f"D_{n}^{k}") for k in range(n + 1)
    ]


def _veronese_generators(spec):
    n, d = spec.n, spec.d
    out = []
    for occ in enumerate_occupations(n, d):
        kind = "product" if max(occ) == n else "gme"
        out.append((generalized_dicke(n, d, occ), kind, f"D_{n}^{occ}"))
    return out


def _gamma_generators(spec):
    n, d = spec.n, spec.d
    top = n * (d - 1)
    return [
        (g_state(n, d, k), "product" if k in (0, top) else "gme", f"G_{n}^{k}")
        for k in range(top + 1)
    ]


def _ksub_generators(spec):
    n, d, k = spec.n, spec.d, spec.k_sub
    t = d - k - 2
    out = []
    for K in range(n, -1, -1):
        for s in range(K * (k + 1) + 1):
            for tail in enumerate_occupations(n - K, t):
                if K == n:
                    kind = "product" if s in (0, n * (k + 1)) else "gme"
                elif K == 0:
                    kind = "product" if max(tail) == n else "gme"
                else:
                    kind = "gme"
                label = f"G_{K},{n}^{s},{tail}"
                out.append((script_g_state(n, d, k, K, s, tail), kind, label))
    return out


def _heterogeneous_generators(spec):
    top = sum(d - 1 for d in spec.dims)
    return [
        (frak_g_state(spec.dims, k), "product" if k in (0, top) else "gme", f"Gfrak^{k}")
        for k in range(top + 1)
    ]


_GENERATORS = {
    Family.QUBIT_DICKE: _qubit_generators,
    Family.QUDIT_VERONESE: _veronese_generators,
    Family.QUDIT_GAMMA: _gamma_generators,
    Family.QUDIT_KSUB: _ksub_generators,
    Family.HETEROGENEOUS: _heterogeneous_generators,
}


def generator_states(spec, with_labels=False):
    """Ordered 0/1 generator states spanning the nUPB, each tagged product or gme."""
    gens = _GENERATORS[spec.family](spec)
    if with_labels:
        return gens
    return [(ket, kind) for ket, kind, _ in gens]


def product_labels(spec):
    """Basis kets |i...i> (or |0..0>, |top>) spanning the product part."""
    return [
        format_index(ket.indices()[0]) for ket, kind in generator_states(spec) if kind == "product"
    ]
