"""Orthogonal decompositions product part + GES + CES and their verification.

The generator states of an nUPB have disjoint 0/1 supports. The product
generators span the product part, the GME generators span a genuinely
entangled subspace, and every vector orthogonal to a generator inside that
generator's support lies in the completely entangled complement. Two
schemes build a basis of those complements: a triangular (Helmert-style)
one with exact integer coefficients, and a Fourier one with roots of unity.
"""

import cmath
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

import numpy as np

from .combinatorics import count_distinct_monomials
from .embeddings import (
    EmbedSpec,
    Family,
    build_nupb,
    choose_generic_points,
    fresh_points,
    generator_states,
    site_coefficients,
    span_rank,
)
from .errors import RangeError, SchemeUnsupported, TooFewTerms
from .gaussian import GaussianRational
from .multirank import is_gme, rank_tolerant
from .states import Ket, NumericKet, product_state

SCHEMES = ("triangular", "dft")
NUMERIC_TOL = 1e-10


def gram_schmidt(kets):
    """Exact, unnormalized Gram-Schmidt; dependent inputs are dropped."""
    out = []
    norms = []
    for u in kets:
        v = u
        for w, nw in zip(out, norms):
            c = w.inner(u) / nw
            if c:
                v = v - w.scale(c)
        if v:
            out.append(v)
            norms.append(v.norm_sq())
    return out


def _ordered_terms(gen, order):
    indices = gen.indices() if order is None else list(order(gen))
    if sorted(indices) != gen.indices():
        raise ValueError("term order must be a permutation of the generator's terms")
    return indices


def _check_generator(gen):
    if len(gen) < 2:
        raise TooFewTerms(f"need at least 2 terms, generator has {len(gen)}")
    if any(v != 1 for _, v in gen.terms()):
        raise ValueError("generator coefficients must all equal 1")


def triangular_ces(gen, order=None):
    """N-1 exact vectors orthogonal to an N-term 0/1 generator.

    Vector t-1 (t = 2..N) puts 1 on the first t-1 terms and -(t-1) on term t;
    its squared norm is t^2 - t. ``order`` maps the generator to its term
    sequence; ascending lexicographic by default.
    """
    _check_generator(gen)
    terms = _ordered_terms(gen, order)
    out = []
    for t in range(2, len(terms) + 1):
        coeffs = {idx: 1 for idx in terms[: t - 1]}
        coeffs[terms[t - 1]] = -(t - 1)
        out.append((Ket(gen.dims, coeffs), Fraction(t * t - t)))
    return out


def dft_ces(gen, order=None):
    """Rows 2..N of the normalized N-point Fourier matrix laid over the generator's terms."""
    _check_generator(gen)
    terms = _ordered_terms(gen, order)
    N = len(terms)
    scale = 1 / np.sqrt(N)
    out = []
    for row in range(1, N):
        coeffs = {idx: scale * cmath.exp(2j * cmath.pi * ((row * col) % N) / N) for col, idx in enumerate(terms)}
        out.append(NumericKet(gen.dims, coeffs))
    return out


def max_ces_dim(dims):
    dims = _check_bound_dims(dims)
    return prod(dims) - sum(d - 1 for d in dims) - 1


def max_ges_dim(dims):
    dims = sorted(_check_bound_dims(dims))
    return (dims[0] - 1) * (prod(dims[1:]) - 1)


def max_sym_ges_dim(n, d):
    if n < 2 or d < 2:
        raise RangeError(f"need n >= 2 and d >= 2, got n={n}, d={d}")
    return comb(n + d - 1, d - 1) - d


def _check_bound_dims(dims):
    dims = tuple(int(d) for d in dims)
    if len(dims) < 2 or any(d < 2 for d in dims):
        raise RangeError(f"need at least two sites of dimension >= 2, got {dims}")
    return dims


def expected_part_sizes(spec):
    """(product, GES, CES) dimensions predicted for the EmbedSpec family."""
    n = spec.n
    total = spec.total_dim
    fam = spec.family
    if fam is Family.QUBIT_DICKE:
        return 2, n - 1, total - n - 1
    if fam is Family.QUDIT_VERONESE:
        d = spec.d
        m = comb(n + d - 1, d - 1)
        return d, m - d, total - m
    if fam is Family.QUDIT_GAMMA:
        d = spec.d
        return 2, n * (d - 1) - 1, total - n * (d - 1) - 1
    if fam is Family.QUDIT_KSUB:
        d, k = spec.d, spec.k_sub
        size = count_distinct_monomials(n, d, k)
        return d - k, size - d + k, total - size
    s = sum(d - 1 for d in spec.dims)
    return 2, s - 1, total - s - 1


@dataclass
class Decomposition:
    spec: EmbedSpec
    scheme: str
    seed: int
    points: list
    product_part: list
    ges_basis: list
    ces_basis: list
    squared_norms: list
    ces_blocks: list = field(default_factory=list)

    @property
    def sizes(self):
        return len(self.product_part), len(self.ges_basis), len(self.ces_basis)

    @property
    def exact(self):
        return self.scheme == "triangular"


def decompose(spec, scheme="triangular", seed=0, term_order=None):
    """Split the full space into product part, GES and CES for ``spec``.

    ``term_order`` optionally fixes the term sequence used inside each GME
    generator by the CES schemes.
    """
    if scheme not in SCHEMES:
        raise SchemeUnsupported(f"unknown scheme {scheme!r}; use one of {SCHEMES}")
    points = choose_generic_points(spec, seed)
    gens = generator_states(spec)
    product_part = [g for g, kind in gens if kind == "product"]
    ges = [g for g, kind in gens if kind == "gme"]
    blocks = []
    norms = []
    for g in ges:
        if scheme == "triangular":
            pairs = triangular_ces(g, term_order)
            blocks.append([v for v, _ in pairs])
            norms.extend(nrm for _, nrm in pairs)
        else:
            vecs = dft_ces(g, term_order)
            blocks.append(vecs)
            norms.extend(1.0 for _ in vecs)
    ces = [v for block in blocks for v in block]
    return Decomposition(spec, scheme, seed, points, product_part, ges, ces, norms, blocks)


def extract_ges_layers(dec):
    """Pull GES layers out of the CES; returns (layers, residual CES).

    Triangular: one layer made of the last vector of every block.
    Fourier: layer j gathers row j+1 of every block, for as long as every
    block still has that row.
    """
    blocks = dec.ces_blocks
    if not blocks or sum(len(b) for b in blocks) != len(dec.ces_basis):
        raise SchemeUnsupported("decomposition carries no consistent CES blocks")
    if dec.scheme == "triangular":
        layer = [b[-1] for b in blocks]
        residual = [v for b in blocks for v in b[:-1]]
        return [layer], residual
    if dec.scheme == "dft":
        depth = min(len(b) for b in blocks)
        layers = [[b[j] for b in blocks] for j in range(depth)]
        residual = [v for b in blocks for v in b[depth:]]
        return layers, residual
    raise SchemeUnsupported(f"unknown scheme {dec.scheme!r}")


def layer_sizes(dec):
    layers, residual = extract_ges_layers(dec)
    return (len(dec.product_part), len(dec.ges_basis), *(len(l) for l in layers), len(residual))


def three_qubit_ges_partition():
    """Three mutually orthogonal GESs of dimensions 2, 3, 3 covering three qubits."""
    dims = (2, 2, 2)
    w = cmath.exp(2j * cmath.pi / 3)
    r2, r3 = 1 / np.sqrt(2), 1 / np.sqrt(3)
    low = [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    high = [(0, 1, 1), (1, 0, 1), (1, 1, 0)]

    def chi(indices, j):
        return NumericKet(dims, {idx: r3 * w ** ((j * t) % 3) for t, idx in enumerate(indices)})

    def ghz(sign):
        return NumericKet(dims, {(0, 0, 0): r2, (1, 1, 1): sign * r2})

    dicke_pair = [NumericKet(dims, {i: 1.0 for i in low}), NumericKet(dims, {i: 1.0 for i in high})]
    return [
        [k.normalized() for k in dicke_pair],
        [ghz(1), chi(low, 1), chi(high, 2)],
        [ghz(-1), chi(low, 2), chi(high, 1)],
    ]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "witnesses": [str(w) for w in self.witnesses],
        }


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _support_components(kets):
    # group vectors whose supports overlap; the span rank is additive over groups
    parent = list(range(len(kets)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner = {}
    for i, k in enumerate(kets):
        for idx in k.support():
            if idx in owner:
                ra, rb = find(owner[idx]), find(i)
                if ra != rb:
                    parent[ra] = rb
            else:
                owner[idx] = i
    groups = {}
    for i in range(len(kets)):
        groups.setdefault(find(i), []).append(kets[i])
    return list(groups.values())


def block_span_rank(kets, exact=True):
    """Span rank computed separately on each group of support-overlapping vectors."""
    total = 0
    for group in _support_components(list(kets)):
        if exact:
            total += span_rank(group)
        else:
            support = sorted(set().union(*(k.support() for k in group)))
            rows = [[k.coeff(i) for i in support] for k in group]
            total += rank_tolerant(rows)
    return total


def _is_zero(value, exact):
    return value == 0 if exact else abs(value) <= NUMERIC_TOL


def _random_gaussian(rng):
    pick = lambda: rng.choice([v for v in range(-9, 10) if v])
    return GaussianRational(pick(), pick())


def verify(dec, trials=200, fresh=20, seed=0):
    """Run every consistency check on a decomposition; failures are reported, not raised."""
    spec = dec.spec
    exact = dec.exact
    report = VerificationReport()
    everything = list(dec.product_part) + list(dec.ges_basis) + list(dec.ces_basis)

    sizes = dec.sizes
    want = expected_part_sizes(spec)
    report.checks.append(
        Check("dimension", sizes == want and sum(sizes) == spec.total_dim,
              f"sizes {sizes}, expected {want}, total {spec.total_dim}")
    )

    bad = []
    for i in range(len(everything)):
        for j in range(i + 1, len(everything)):
            a, b = everything[i], everything[j]
            if not a.support() & b.support():
                continue
            if not _is_zero(a.inner(b), exact):
                bad.append((i, j))
    if not exact:
        for i, v in enumerate(dec.ces_basis):
            if abs(v.norm_sq() - 1) > NUMERIC_TOL:
                bad.append((i, i))
    report.checks.append(
        Check("orthogonality", not bad, f"{len(bad)} non-orthogonal pairs", bad[:10])
    )

    rank = block_span_rank(everything, exact)
    report.checks.append(
        Check("span_rank", rank == spec.total_dim, f"rank {rank} of {spec.total_dim}")
    )

    not_gme = [i for i, g in enumerate(dec.ges_basis) if not is_gme(g).gme]
    report.checks.append(
        Check("gme_per_vector", not not_gme, f"{len(not_gme)} GES vectors not GME", not_gme)
    )

    rng = random.Random(seed)
    failures = []
    if dec.ges_basis:
        for trial in range(trials):
            coeffs = [_random_gaussian(rng) for _ in dec.ges_basis]
            combo = dec.ges_basis[0].scale(coeffs[0])
            for c, g in zip(coeffs[1:], dec.ges_basis[1:]):
                combo = combo + g.scale(c)
            if not combo or not is_gme(combo).gme:
                failures.append(trial)
    report.checks.append(
        Check("sampled_combination_gme", not failures,
              f"{trials} trials, {len(failures)} failures", failures[:10])
    )

    new_points = fresh_points(spec, fresh, avoid=dec.points, seed=seed)
    members = [
        product_state(spec.dims, [site_coefficients(spec, j, p) for j in range(spec.n)])
        for p in new_points
    ]
    hits = []
    for i, v in enumerate(dec.ces_basis):
        for p, m in zip(new_points, members):
            if exact:
                ok = v.inner(m) == 0
            else:
                ok = abs(v.inner(m)) <= NUMERIC_TOL * float(m.norm_sq()) ** 0.5
            if not ok:
                hits.append((i, p.x))
    report.checks.append(
        Check("ces_vs_fresh_points", not hits,
              f"{len(dec.ces_basis)} CES vectors against {fresh} fresh product states", hits[:10])
    )

    ges_dim, ces_dim = sizes[1], sizes[2]
    formula = [ges_dim <= max_ges_dim(spec.dims), ces_dim <= max_ces_dim(spec.dims)]
    notes = [f"GES {ges_dim} <= {max_ges_dim(spec.dims)}", f"CES {ces_dim} <= {max_ces_dim(spec.dims)}"]
    if spec.homogeneous and spec.k_sub == 0:
        formula.append(ges_dim == max_sym_ges_dim(spec.n, spec.d))
        notes.append(f"GES {ges_dim} == {max_sym_ges_dim(spec.n, spec.d)}")
    if not spec.homogeneous or spec.k_sub == spec.dims[0] - 2:
        formula.append(ces_dim == max_ces_dim(spec.dims))
        notes.append(f"CES {ces_dim} == {max_ces_dim(spec.dims)}")
    report.checks.append(Check("formula", all(formula), "; ".join(notes)))

    nupb = build_nupb(spec, dec.points).members
    gens = list(dec.product_part) + list(dec.ges_basis)
    r_n, r_g, r_u = span_rank(nupb), span_rank(gens), span_rank(nupb + gens)
    report.checks.append(
        Check("nupb_span", r_n == r_g == r_u == len(nupb),
              f"nUPB rank {r_n}, generator rank {r_g}, union rank {r_u}")
    )
    return report
