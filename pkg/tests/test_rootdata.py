from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satake.rootdata import (
    ChamberPoint,
    DomainError,
    SimpleType,
    build_root_datum,
    coroot_level,
    datum_to_json,
    dominant_representative,
    fmt_rational,
    fold,
    is_hermitian,
    is_hermitian_by_orbit,
    pairing,
    parse_rational,
    scale,
)

H = F(1, 2)

ALL_TYPES = (
    [SimpleType("A", n) for n in range(1, 9)]
    + [SimpleType(f, n) for f in "BC" for n in range(1, 9)]
    + [SimpleType("D", n) for n in range(3, 9)]
    + [SimpleType.parse(s) for s in ("G2", "F4", "E6", "E7", "E8")]
)
COXETER = {"G2": 6, "F4": 12, "E6": 12, "E7": 18, "E8": 30}


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_datum_invariants(t):
    d = build_root_datum(t)
    for i, a in enumerate(d.simple_coroots):
        for j, w in enumerate(d.fundamental_weights):
            assert pairing(a, w) == (1 if i == j else 0)
    assert len(d.positive_coroots) == (t.lie_algebra_dimension - t.rank) // 2
    assert d.level(d.highest_coroot) == d.coxeter_number - 1
    assert tuple(sum(c) for c in zip(*d.fundamental_weights)) == d.rho
    assert sum(d.degrees) == len(d.positive_coroots) + d.rank


@pytest.mark.parametrize("name,h", COXETER.items())
def test_exceptional_coxeter_numbers(name, h):
    assert build_root_datum(SimpleType.parse(name)).coxeter_number == h


def test_g2_highest_coroot():
    d = build_root_datum(SimpleType.parse("G2"))
    a1, a2 = d.simple_coroots
    assert d.highest_coroot == tuple(3 * x + 2 * y for x, y in zip(a1, a2))
    assert d.coroot_coefficients[-1] == (3, 2)


def test_a1_single_root():
    d = build_root_datum(SimpleType("A", 1))
    assert len(d.positive_coroots) == 1
    assert d.rho == d.fundamental_weights[0]
    assert d.cartan_matrix() == ((2,),)


def test_f4_has_24_positive_coroots():
    d = build_root_datum(SimpleType.parse("F4"))
    assert len(d.positive_coroots) == 24 and d.coxeter_number == 12


def test_e7_pairing_three_quarters():
    d = build_root_datum(SimpleType.parse("E7"))
    assert pairing(d.fundamental_coweights[6], scale(H, d.fundamental_weights[6])) == F(3, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_gamma_against_half_omega1_in_odd_orthogonal(n):
    d = build_root_datum(SimpleType("B", n))
    assert pairing(d.highest_coroot, scale(H, d.fundamental_weights[0])) == H


def test_coroot_levels():
    e8 = build_root_datum(SimpleType.parse("E8"))
    beta = tuple(H * x for x in (1, -1, 1, 1, 1, 1, -1, 1))
    assert coroot_level(e8, beta) == 15
    f4 = build_root_datum(SimpleType.parse("F4"))
    b = tuple(sum(c * a[k] for c, a in zip((1, 2, 4, 2), f4.simple_coroots)) for k in range(4))
    assert coroot_level(f4, b) == 9
    assert all(coroot_level(f4, a) == 1 for a in f4.simple_coroots)
    with pytest.raises(DomainError):
        coroot_level(f4, (F(7), 0, 0, 0))


@pytest.mark.parametrize("bad", [("E", 5), ("D", 2), ("F", 3), ("G", 3), ("X", 2)])
def test_invalid_types(bad):
    with pytest.raises(DomainError):
        SimpleType(*bad)


def test_parse_type_forms():
    assert SimpleType.parse("e8") == SimpleType("E", 8)
    assert SimpleType.parse("C", 3) == SimpleType("C", 3)
    assert SimpleType.parse("F4").dual == SimpleType("F", 4)
    assert SimpleType("B", 3).dual == SimpleType("C", 3)
    with pytest.raises(DomainError):
        SimpleType.parse("B")


def test_dominant_representative_examples():
    c3 = build_root_datum(SimpleType("C", 3))
    p = ChamberPoint(c3, (1, H, 0))
    assert dominant_representative(p).nu == (0, H, 1)
    assert dominant_representative(ChamberPoint(c3, (0, H, 1))).nu == (0, H, 1)


def test_hermitian_examples():
    f4 = build_root_datum(SimpleType.parse("F4"))
    assert is_hermitian(ChamberPoint.from_fundamental(f4, (1, 0, H, 2)))
    e6 = build_root_datum(SimpleType.parse("E6"))
    assert not is_hermitian(ChamberPoint.from_fundamental(e6, (1, 0, 0, 0, 0, 0)))
    assert is_hermitian(ChamberPoint(e6, e6.zero()))


def test_fold_rows():
    S = SimpleType
    assert fold(S("A", 5), 2) == S("B", 3)
    assert fold(S("A", 6), 2) == S("C", 3)
    assert fold(S("D", 6), 2) == S("C", 5)
    assert fold(S("D", 4), 3) == S("G", 2)
    assert fold(S("E", 6), 2) == S("F", 4)
    for t, k in ((S("A", 1), 2), (S("C", 3), 2), (S("D", 6), 3), (S("E", 8), 2), (S("A", 5), 3)):
        with pytest.raises(DomainError):
            fold(t, k)


def test_rationals():
    assert parse_rational("-3/4") == F(-3, 4)
    assert parse_rational(" 2 ") == 2
    for bad in ("0.5", "1/0", "a", "1e3", ""):
        with pytest.raises(DomainError):
            parse_rational(bad)


@given(st.fractions(max_denominator=50))
def test_rational_round_trip(x):
    assert parse_rational(fmt_rational(x)) == x


def test_json_document():
    doc = datum_to_json(build_root_datum(SimpleType.parse("F4")))
    assert doc["schema"] == "satake.rootdatum/1"
    assert len(doc["positive_coroots"]) == 24
    assert all(isinstance(x, str) for v in doc["simple_coroots"] for x in v)


# --- Weyl-orbit properties ------------------------------------------------

PROP_TYPES = [SimpleType.parse(s) for s in ("A3", "B3", "C3", "D4", "G2", "F4", "E6")]


@st.composite
def point_and_word(draw):
    t = draw(st.sampled_from(PROP_TYPES))
    d = build_root_datum(t)
    coeffs = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=d.rank, max_size=d.rank))
    word = draw(st.lists(st.integers(0, d.rank - 1), max_size=12))
    return d, ChamberPoint.from_fundamental(d, coeffs), word


@settings(max_examples=80, deadline=None)
@given(point_and_word())
def test_dominant_representative_is_orbit_invariant(data):
    d, p, word = data
    q = p.nu
    for i in word:
        q = d.reflect(i, q)
    a = dominant_representative(p)
    assert dominant_representative(ChamberPoint(d, q)) == a
    assert a.is_dominant()
    assert dominant_representative(a) == a


@settings(max_examples=60, deadline=None)
@given(point_and_word())
def test_hermitian_matches_orbit_definition(data):
    _, p, _ = data
    q = dominant_representative(p)
    assert is_hermitian(q) == is_hermitian_by_orbit(q)
