from fractions import Fraction
from itertools import product

import pytest

from entsub import embeddings
from entsub.embeddings import (
    EmbedSpec,
    EvaluationPoint,
    Family,
    build_nupb,
    choose_generic_points,
    fresh_points,
    generator_states,
    nupb_size,
    product_labels,
    site_coefficients,
    span_rank,
)
from entsub.errors import DimsMismatch, ExhaustedRetries, RangeError, RankDeficient, SpecMismatch
from entsub.multirank import is_fully_product, is_gme, rank_exact
from entsub.states import Ket, dicke
from helpers import ket_from_text


def all_small_specs():
    for n in (2, 3):
        for d in (2, 3, 4):
            for k in range(d - 1):
                yield EmbedSpec((d,) * n, k)
        for dims in product((2, 3, 4), repeat=n):
            if len(set(dims)) > 1:
                yield EmbedSpec(dims)


def test_spec_defaults_and_families():
    assert EmbedSpec((2, 2, 2)).family is Family.QUBIT_DICKE
    assert EmbedSpec((3, 3, 3)).k_sub == 1
    assert EmbedSpec((3, 3, 3)).family is Family.QUDIT_GAMMA
    assert EmbedSpec((3, 3, 3), 0).family is Family.QUDIT_VERONESE
    assert EmbedSpec((5, 5), 1).family is Family.QUDIT_KSUB
    assert EmbedSpec((2, 3, 4)).family is Family.HETEROGENEOUS
    assert EmbedSpec((2, 3, 4)).k_sub is None
    with pytest.raises(SpecMismatch):
        EmbedSpec((2, 3), 0)
    with pytest.raises(RangeError):
        EmbedSpec((4, 4), 3)
    with pytest.raises(RangeError):
        EmbedSpec((3,))


def test_site_coefficients_examples():
    het = EmbedSpec((2, 4))
    assert site_coefficients(het, 1, EvaluationPoint(2)) == [1, 2, 4, 8]
    ksub = EmbedSpec((4, 4, 4), 1)
    assert site_coefficients(ksub, 0, EvaluationPoint(3, [5])) == [1, 3, 9, 5]
    assert site_coefficients(EmbedSpec((2, 2)), 0, EvaluationPoint(0)) == [1, 0]
    with pytest.raises(SpecMismatch):
        site_coefficients(ksub, 0, EvaluationPoint(3))


def test_nupb_size_examples():
    assert nupb_size(EmbedSpec((2,) * 4)) == 5
    assert nupb_size(EmbedSpec((3, 3, 3), 1)) == 7
    assert nupb_size(EmbedSpec((2, 3, 4))) == 7
    assert nupb_size(EmbedSpec((3, 3, 3), 0)) == 10
    assert nupb_size(EmbedSpec((4, 4, 4), 1)) == 16


def test_qubit_nupb_matches_vandermonde_rank():
    spec = EmbedSpec((2, 2, 2))
    points = [EvaluationPoint(x) for x in range(4)]
    nupb = build_nupb(spec, points)
    assert span_rank(nupb.members) == 4
    vandermonde = [[Fraction(x) ** w for w in range(4)] for x in range(4)]
    assert rank_exact(vandermonde) == 4
    # every member lies in the symmetric span
    sym = [dicke(3, k) for k in range(4)]
    assert span_rank(sym + nupb.members) == 4


def test_duplicate_points_are_rank_deficient():
    spec = EmbedSpec((2, 2, 2))
    points = [EvaluationPoint(x) for x in (0, 1, 2, 2)]
    with pytest.raises(RankDeficient) as info:
        build_nupb(spec, points)
    assert EvaluationPoint(2) in info.value.points


def test_wrong_number_of_points():
    with pytest.raises(RangeError):
        build_nupb(EmbedSpec((2, 2)), [EvaluationPoint(0)])


def test_gamma_nupb_rank():
    spec = EmbedSpec((3, 3, 3), 1)
    assert span_rank(build_nupb(spec, [EvaluationPoint(x) for x in range(7)]).members) == 7


def test_choose_generic_points():
    pts = choose_generic_points(EmbedSpec((2, 2, 2)), seed=0)
    assert [p.x for p in pts] == [0, 1, 2, 3]
    spec = EmbedSpec((3, 3, 3), 0)
    pts = choose_generic_points(spec, seed=0)
    assert len(pts) == 10
    assert span_rank(build_nupb(spec, pts).members) == 10
    assert choose_generic_points(spec, seed=3) == choose_generic_points(spec, seed=3)
    assert choose_generic_points(spec, seed=3) != pts


def test_choose_points_gives_up(monkeypatch):
    def always_fail(spec, points):
        raise RankDeficient("forced", points)

    monkeypatch.setattr(embeddings, "build_nupb", always_fail)
    with pytest.raises(ExhaustedRetries):
        choose_generic_points(EmbedSpec((2, 2)))


def test_fresh_points_avoid_used_values():
    spec = EmbedSpec((4, 4), 1)
    used = choose_generic_points(spec)
    new = fresh_points(spec, 5, avoid=used)
    assert not {p.x for p in new} & {p.x for p in used}
    used_coords = {c for p in used for c in p.free_coords}
    assert not {c for p in new for c in p.free_coords} & used_coords


def test_span_rank_examples():
    dims = (2, 2)
    assert span_rank([ket_from_text(dims, "|00>"), ket_from_text(dims, "|00> + |11>")]) == 2
    assert span_rank([]) == 0
    with pytest.raises(DimsMismatch):
        span_rank([dicke(2, 1), dicke(3, 1)])


def test_generator_examples():
    gens = generator_states(EmbedSpec((2,) * 4))
    assert len(gens) == 5
    assert [kind for _, kind in gens] == ["product", "gme", "gme", "gme", "product"]
    assert gens[0][0] == Ket.basis((2,) * 4, (0,) * 4)
    gens = generator_states(EmbedSpec((3, 3, 3), 0))
    assert sum(kind == "product" for _, kind in gens) == 3
    assert sum(kind == "gme" for _, kind in gens) == 7
    spec = EmbedSpec((4, 4, 4), 1)
    gens = generator_states(spec)
    assert sum(kind == "gme" for _, kind in gens) == 13
    assert product_labels(spec) == ["000", "222", "333"]
    # the two basis product states come first and last
    assert gens[0][1] == "product" and gens[-1][1] == "product"


def test_generator_invariants_on_small_specs():
    for spec in all_small_specs():
        gens = generator_states(spec)
        kets = [g for g, _ in gens]
        assert len(gens) == nupb_size(spec)
        assert span_rank(kets) == nupb_size(spec)
        for i, a in enumerate(kets):
            for b in kets[i + 1 :]:
                assert a.inner(b) == 0
        for ket, kind in gens:
            if kind == "gme":
                assert is_gme(ket).gme, (spec, ket)
            else:
                assert is_fully_product(ket), (spec, ket)
        members = build_nupb(spec, choose_generic_points(spec)).members
        assert span_rank(members) == span_rank(kets) == span_rank(members + kets)


def test_ksub_product_part_size():
    for d in (4, 5):
        for k in range(1, d - 2):
            spec = EmbedSpec((d, d), k)
            assert len(product_labels(spec)) == d - k
