from collections import Counter

import pytest

from satake.orbits import catalog, find_orbit, is_very_even, parse_partition
from satake.repweights import STANDARD, central_pattern
from satake.rootdata import DomainError, SimpleType, pairing

EXCEPTIONAL_COUNTS = {"G2": 5, "F4": 16, "E6": 21, "E7": 45, "E8": 70}
MINIMAL_DIMS = {"G2": 6, "F4": 16, "E6": 22, "E7": 34, "E8": 58}


def _partitions(n, top=None):
    top = n if top is None else top
    if n == 0:
        yield ()
        return
    for k in range(min(n, top), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _orbit_count(family, n):
    # partitions with the parity rule; very even ones in type D count twice
    size = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[family]
    total = 0
    for lam in _partitions(size):
        c = Counter(lam)
        if family == "C" and any(c[j] % 2 for j in c if j % 2):
            continue
        if family in "BD" and any(c[j] % 2 for j in c if j % 2 == 0):
            continue
        total += 2 if family == "D" and all(j % 2 == 0 for j in lam) else 1
    return total


@pytest.mark.parametrize("name,count", EXCEPTIONAL_COUNTS.items())
def test_exceptional_catalog_sizes(name, count):
    orbits = catalog(SimpleType.parse(name))
    assert len(orbits) == count
    assert len({o.label for o in orbits}) == count


@pytest.mark.parametrize(
    "t", [SimpleType(f, n) for f in "ABC" for n in range(1, 6)] + [SimpleType("D", n) for n in range(3, 7)], ids=str
)
def test_classical_catalog_sizes(t):
    assert len(catalog(t)) == _orbit_count(t.family, t.rank)


@pytest.mark.parametrize("name", EXCEPTIONAL_COUNTS)
def test_extreme_orbit_dimensions(name):
    t = SimpleType.parse(name)
    dims = sorted(o.dimension for o in catalog(t))
    assert dims[0] == 0
    assert dims[1] == MINIMAL_DIMS[name]
    assert dims[-1] == t.lie_algebra_dimension - t.rank


@pytest.mark.parametrize("name", EXCEPTIONAL_COUNTS)
def test_neutral_elements_are_dominant_with_marks(name):
    for o in catalog(SimpleType.parse(name)):
        # the roots of the dual Lie algebra are the coroots
        marks = tuple(int(pairing(a, o.neutral_element)) for a in o.datum.simple_coroots)
        assert set(marks) <= {0, 1, 2}
        assert marks == tuple(o.marks)


@pytest.mark.parametrize("t", [SimpleType("C", 3), SimpleType("B", 3), SimpleType("D", 4), SimpleType("A", 4)], ids=str)
def test_standard_pattern_is_jordan_type(t):
    # h acts on each Jordan block of size j with eigenvalues j-1, j-3, ..., 1-j
    for o in catalog(t):
        expect = Counter()
        for j in o.partition:
            for k in range(j):
                expect[j - 1 - 2 * k] += 1
        assert dict(central_pattern(o, STANDARD)) == dict(expect)


def test_find_orbit():
    e8 = SimpleType.parse("E8")
    assert find_orbit(e8, "A2+2A1").label == "A2+2A1"
    assert find_orbit(e8, "2A1+A2").label == "A2+2A1"
    assert find_orbit(SimpleType.parse("F4"), "A1+~A1").label == "A1+Ã1"
    assert find_orbit(SimpleType("D", 4), "4,4 II").very_even_tag == "II"
    with pytest.raises(DomainError):
        find_orbit(SimpleType("D", 4), "4,4")
    with pytest.raises(DomainError):
        find_orbit(e8, "A9")
    with pytest.raises(DomainError):
        find_orbit(SimpleType("C", 3), "3,2,1")


def test_partitions_helpers():
    assert parse_partition("2,2,1,1") == (2, 2, 1, 1)
    assert is_very_even((4, 4)) and not is_very_even((3, 3, 1, 1))


def test_orbit_json_fields():
    o = find_orbit(SimpleType.parse("E8"), "D6")
    doc = o.to_json()
    assert doc["label"] == "D6" and doc["centralizer"] == ["B2"]
