import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entsub.combinatorics import enumerate_occupations
from entsub.errors import BadPartition, RangeError, ZeroState
from entsub.gaussian import GaussianRational
from entsub.multirank import (
    bipartitions,
    catalecticant,
    flatten,
    is_fully_product,
    is_gme,
    multirank,
    rank_exact,
    rank_tolerant,
)
from entsub.states import Ket, NumericKet, dicke, generalized_dicke, product_state
from helpers import ket_from_text, rank_by_minors

BB = "|0000> + |0011> + |1100> + |1111>"


def test_flatten_shapes_and_entries():
    psi = ket_from_text((2, 3, 2), "|000> + 2|121> - |011>")
    m = flatten(psi, (2,))
    assert m.shape == (3, 4)
    assert m.entries[m.row_labels.index((2,))][m.col_labels.index((1, 1))] == 2
    assert m.entries[m.row_labels.index((1,))][m.col_labels.index((0, 1))] == -1
    assert m.entries[m.row_labels.index((1,))][m.col_labels.index((0, 0))] == 0
    assert flatten(psi, (1, 3)).shape == (4, 3)


def test_flatten_examples():
    bb = ket_from_text((2,) * 4, BB)
    assert rank_exact(flatten(bb, (1, 2))) == 1
    assert flatten(bb, (1, 2)).shape == (4, 4)
    ghz = ket_from_text((2,) * 4, "|0000> + |1111>")
    m = flatten(ghz, (1,))
    assert m.shape == (2, 8) and rank_exact(m) == 2
    prod = product_state((2, 3, 2), [[1, 2], [1, 0, -1], [3, 1]])
    for I in [(1,), (2,), (3,), (1, 2), (1, 3)]:
        assert rank_exact(flatten(prod, I)) == 1


def test_bad_partitions():
    psi = dicke(4, 1)
    for I in [(), (0,), (2, 1), (1, 1), (5,), (1, 2, 3, 4)]:
        with pytest.raises(BadPartition):
            flatten(psi, I)


def test_rank_exact_examples():
    assert rank_exact([[0, 0], [0, 0]]) == 0
    assert rank_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank_exact(catalecticant([2**j for j in range(5)], 2)) == 1
    assert rank_exact([[Fraction(1, 3), Fraction(1, 2)], [2, 3]]) == 1
    i = GaussianRational(0, 1)
    assert rank_exact([[1, i], [i, -1]]) == 1
    assert rank_exact([[1, i], [i, 1]]) == 2


def test_catalecticant_examples():
    z = [GaussianRational(v) for v in (0, 3, -1, 5, 0)]
    m = catalecticant(z, 2)
    assert m.shape == (3, 3)
    assert all(m.entries[r][c] == z[r + c] for r in range(3) for c in range(3))
    assert rank_exact(m) >= 2
    assert rank_exact(catalecticant([1, 0, 0, 0], 1)) == 1
    assert rank_exact(catalecticant([1, 2, 4, 8, 16], 2)) == 1
    with pytest.raises(RangeError):
        catalecticant([1, 2, 3], 2)


def test_multirank_examples():
    dims = (2,) * 4
    ghz = ket_from_text(dims, "|0000> + |1111>")
    assert [r for _, r in multirank(ghz, 2)] == [2, 2, 2]
    assert [r for _, r in multirank(dicke(4, 1), 1)] == [2, 2, 2, 2]
    bb = ket_from_text(dims, BB)
    assert [I for I, _ in multirank(bb, 2)] == [(1, 2), (1, 3), (1, 4)]
    assert [r for _, r in multirank(bb, 2)] == [1, 4, 4]
    with pytest.raises(RangeError):
        multirank(bb, 3)


def test_bipartition_counts():
    assert len(bipartitions(5, 2)) == 10
    assert len(bipartitions(6, 3)) == 10
    assert len(bipartitions(4, 1)) == 4


def test_is_gme_examples():
    assert is_gme(dicke(4, 2)).gme
    rep = is_gme(Ket.basis((2,) * 4, (0,) * 4))
    assert not rep.gme and rep.min_rank() == 1
    assert not is_gme(ket_from_text((2,) * 4, BB)).gme
    with pytest.raises(ZeroState):
        is_gme(Ket((2, 2)))


def test_is_fully_product_examples():
    assert is_fully_product(product_state((2, 3, 4), [[1, 1], [0, 1, 2], [1, 0, 0, 5]]))
    assert not is_fully_product(dicke(3, 1))
    assert not is_fully_product(ket_from_text((2,) * 4, BB))
    # biseparable on a site beyond the first half
    psi = ket_from_text((2, 2, 2), "|000> + |011>")
    assert not is_fully_product(psi) and not is_gme(psi).gme


def test_generalized_dicke_gme_and_products():
    for n in (2, 3, 4):
        for d in (2, 3):
            for occ in enumerate_occupations(n, d):
                rep = is_gme(generalized_dicke(n, d, occ))
                assert rep.gme == (max(occ) < n)
            for level in range(d):
                assert not is_gme(Ket.basis((d,) * n, (level,) * n)).gme


def test_symmetric_multiranks_are_constant():
    psi = dicke(5, 2) + dicke(5, 4).scale(3)
    rep = is_gme(psi)
    for ell, entries in rep.ranks.items():
        assert len({r for _, r in entries}) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.data())
def test_symmetric_flattening_rank_equals_catalecticant(n, data):
    c = data.draw(st.lists(st.integers(-3, 3), min_size=n + 1, max_size=n + 1))
    if not any(c):
        return
    psi = Ket((2,) * n)
    for k, ck in enumerate(c):
        psi = psi + dicke(n, k).scale(ck)
    for i in range(1, n // 2 + 1):
        assert rank_exact(flatten(psi, tuple(range(1, i + 1)))) == rank_exact(catalecticant(c, i))


ints = st.integers(-5, 5)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_exact_against_minor_oracle(r, c, data):
    m = data.draw(st.lists(st.lists(ints, min_size=c, max_size=c), min_size=r, max_size=r))
    # force some dependence now and then
    if r >= 2 and data.draw(st.booleans()):
        m[-1] = [a + 2 * b for a, b in zip(m[0], m[1])]
    assert rank_exact(m) == rank_by_minors(m)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_gaussian_rank_against_minor_oracle(r, c, data):
    pairs = st.tuples(ints, ints, st.integers(1, 3))
    raw = data.draw(st.lists(st.lists(pairs, min_size=c, max_size=c), min_size=r, max_size=r))
    m = [[GaussianRational(Fraction(a, q), Fraction(b, q)) for a, b, q in row] for row in raw]
    if r >= 2:
        z = GaussianRational(1, -2)
        m[-1] = [x * z for x in m[0]]
    assert rank_exact(m) == rank_by_minors(m)
    assert rank_tolerant(m) == rank_exact(m)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_flattening_rank_against_minor_oracle(data):
    dims = tuple(data.draw(st.lists(st.integers(2, 3), min_size=2, max_size=3)))
    entries = data.draw(st.dictionaries(st.tuples(*(st.integers(0, d - 1) for d in dims)), ints, max_size=10))
    psi = Ket(dims, entries)
    for I in [(1,), (2,)]:
        m = flatten(psi, I)
        assert rank_exact(m) == rank_by_minors(m.entries)


def test_rank_tolerant_examples():
    assert rank_tolerant(np.zeros((3, 4))) == 0
    assert rank_tolerant([[1, 2], [2, 4]]) == 1
    assert rank_tolerant(np.eye(5)) == 5
    with pytest.raises(RangeError):
        rank_tolerant([[1]], 0)


def test_fourier_vectors_tolerant_rank_matches_exact():
    # with four terms the Fourier root is i, so the same vectors are exact Gaussian rationals
    i = GaussianRational(0, 1)
    terms = dicke(4, 1).indices()
    for row in range(1, 4):
        exact = Ket((2,) * 4, {t: i ** ((row * c) % 4) for c, t in enumerate(terms)})
        numeric = NumericKet((2,) * 4, {t: 1j ** ((row * c) % 4) for c, t in enumerate(terms)})
        for ell in (1, 2):
            assert multirank(numeric, ell) == multirank(exact, ell)
        assert is_gme(exact).gme and is_gme(numeric).gme


def test_fourier_vectors_on_six_terms_are_gme():
    w = cmath.exp(2j * cmath.pi / 6)
    terms = dicke(4, 2).indices()
    for row in range(1, 6):
        phi = NumericKet((2,) * 4, {t: w ** (row * c) for c, t in enumerate(terms)})
        assert is_gme(phi).min_rank() >= 2
