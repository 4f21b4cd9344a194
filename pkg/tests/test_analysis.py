import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satake.analysis import (
    AZS_EXPECTED,
    MarginalMatrix,
    azs_elimination_table,
    elimination_patterns,
    halfspin_top_levels,
    marginals,
    orbit_from_pattern,
    property_a_check,
    random_symmetric_matrix,
)
from satake.orbits import catalog, find_orbit
from satake.repweights import ADJOINT, STANDARD, WeightPattern, central_pattern, filtration_row
from satake.rootdata import DomainError, SimpleType
from satake.unitarity import extraneous_points

S = SimpleType.parse


# --- marginals ------------------------------------------------------------


def test_marginals_of_two_dimensional_example():
    m = MarginalMatrix({(0, 1): 1, (0, -1): 1})
    n_v, n_u = marginals(m)
    assert n_u == {1: 1, -1: 1} and n_v == {0: 2}
    assert m.is_symmetric()


def test_diagonal_matrix():
    m = MarginalMatrix({(i, i): c for i, c in ((3, 2), (0, 1), (-3, 2))})
    n_v, n_u = marginals(m)
    assert n_v == n_u == {3: 2, 0: 1, -3: 2}
    assert property_a_check(n_u, n_v).case == "DiagonalMatch"


def test_asymmetric_matrix_detected():
    assert not MarginalMatrix({(0, 1): 1}).is_symmetric()


def test_tsv_round_trip():
    m = random_symmetric_matrix(random.Random(5))
    assert MarginalMatrix.from_tsv(m.to_tsv()) == m
    with pytest.raises(DomainError):
        MarginalMatrix.from_tsv("i k a\n0 0 1\n")
    with pytest.raises(DomainError):
        MarginalMatrix.from_tsv("i\tk\ta\n0\t0\tx\n")
    with pytest.raises(DomainError):
        MarginalMatrix({(0, 0): -1})


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_marginals_equal_direct_sums(seed):
    m = random_symmetric_matrix(random.Random(seed), lo=-6, hi=6, fill=0.2)
    n_v, n_u = marginals(m)
    for i in range(-6, 7):
        assert n_v[i] == sum(m[(i, k)] for k in range(-6, 7))
        assert n_u[i] == sum(m[(k, i)] for k in range(-6, 7))


# --- Property A -----------------------------------------------------------


def test_property_a_cases():
    assert property_a_check({2: 1, 0: 1}, {2: 1, 0: 1}).case == "DiagonalMatch"
    v = property_a_check({1: 1, -1: 1}, {0: 2})
    assert (v.case, v.i0, v.n_u, v.n_v) == ("TruncationAt", 1, 1, 0)
    v = property_a_check({0: 2}, {1: 1, -1: 1})
    assert (v.case, v.i0) == ("Violation", 1)
    with pytest.raises(DomainError):
        property_a_check({0: 1}, {0: 2})


@settings(max_examples=300, deadline=None)
@given(
    st.dictionaries(
        st.tuples(st.integers(-5, 5), st.integers(0, 5)), st.integers(1, 3), max_size=12
    )
)
def test_symmetric_matrices_never_violate(raw):
    entries = {}
    for (i, j), a in raw.items():
        entries[(i, i + j)] = a
        entries[(i, i - j)] = a
    n_v, n_u = marginals(MarginalMatrix(entries))
    assert property_a_check(n_u, n_v).case != "Violation"


def test_random_suite_is_seeded():
    a = [marginals(random_symmetric_matrix(random.Random(9))) for _ in range(3)]
    assert a[0] == a[1] == a[2]


# --- elimination table ----------------------------------------------------


def test_f4_b3_discrepancy():
    (e,) = extraneous_points(find_orbit(S("F4"), "B3"))
    n_u, n_v = elimination_patterns(e, ADJOINT)
    assert n_u[10] == n_v[10] == 1 and n_u[9] == n_v[9] == 0
    v = property_a_check(n_u, n_v)
    assert (v.case, v.i0, v.n_v, v.n_u) == ("Violation", 8, 2, 1)


def test_e8_d6_discrepancy():
    (e,) = extraneous_points(find_orbit(S("E8"), "D6"))
    n_u, n_v = elimination_patterns(e, ADJOINT)
    assert n_u[18] == n_v[18] == 1 and n_u[17] == n_v[17] == 0
    assert (n_v[16], n_u[16]) == (2, 1)


def test_azs_table():
    rows = azs_elimination_table()
    assert all(r.matches for r in rows)
    assert all(r.verdict.case == "Violation" for r in rows)
    exc = [r for r in rows if r.eps is None]
    assert len(exc) == len(AZS_EXPECTED) == 7
    classical = [r for r in rows if r.eps is not None]
    assert {r.rep for r in classical} == {"StandardClassical"}
    assert any(r.dual_type == "C6" for r in classical)


# --- orbit recovery -------------------------------------------------------


@pytest.mark.parametrize(
    "name,row,label",
    [("E8", "64,56,28,8", "4A1"), ("G2", "14", "1"), ("F4", "10,0,7,0,6,0,6,0,1,0,1", "B3")],
)
def test_orbit_from_pattern_examples(name, row, label):
    assert orbit_from_pattern(S(name), row).label == label


@pytest.mark.parametrize("name", ["G2", "F4", "E6", "E7", "E8"])
def test_rows_are_injective(name):
    t = S(name)
    rows = [filtration_row(o) for o in catalog(t)]
    assert len(set(rows)) == len(rows)
    for o, r in zip(catalog(t), rows):
        assert orbit_from_pattern(t, r) == o


def test_unknown_row():
    with pytest.raises(DomainError):
        orbit_from_pattern(S("G2"), "13")


def test_d4_very_even_pair():
    t = SimpleType("D", 4)
    o1, o2 = find_orbit(t, "4,4", "I"), find_orbit(t, "4,4", "II")
    assert halfspin_top_levels(o1) == (4, 3)
    assert halfspin_top_levels(o2) == (4, 3)
    row = filtration_row(o1)
    with pytest.raises(DomainError):
        orbit_from_pattern(t, row)
    for o, top in ((o1, 4), (o2, 3)):
        got = orbit_from_pattern(t, row, halfspin_top=top, discriminators={STANDARD: central_pattern(o, STANDARD)})
        assert got == o


def test_d6_halfspin_levels():
    # oracle: all 32 half-spin weights against both neutral elements
    out = []
    for h in ((1, 1, 3, 3, 1, 1), (1, 1, 3, 3, 1, -1)):
        best = max(
            sum(x * y for x, y in zip(s, h)) // 2
            for s in itertools.product((1, -1), repeat=6)
            if s.count(-1) % 2 == 0
        )
        out.append(best)
    o = find_orbit(SimpleType("D", 6), "4,4,2,2", "I")
    assert set(halfspin_top_levels(o)) == set(out) and len(set(out)) == 2


def test_halfspin_requires_very_even():
    with pytest.raises(DomainError):
        halfspin_top_levels(find_orbit(SimpleType("D", 4), "3,3,1,1"))


def test_pattern_input_forms():
    o = find_orbit(S("G2"), "A1")
    r = filtration_row(o)
    assert orbit_from_pattern(S("G2"), [4, 4, 1]) == o
    assert orbit_from_pattern(S("G2"), central_pattern(o)) == o
    assert orbit_from_pattern(S("G2"), WeightPattern({0: 4, 1: 4, 2: 1})) == o
    assert r.paper_string() == "4,4,1"
