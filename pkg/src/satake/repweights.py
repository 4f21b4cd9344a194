"""Weights of the representations of the dual group used in the analysis, and weight patterns."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .orbits import NilpotentOrbit
from .rootdata import (
    HALF,
    ChamberPoint,
    DomainError,
    RootDatum,
    Vector,
    fmt_vector,
    pairing,
    scale,
)

KINDS = (
    "Adjoint",
    "StandardClassical",
    "Spin",
    "HalfSpinPlus",
    "HalfSpinMinus",
    "MinusculeOrbit",
    "HighestWeightPairingOnly",
)


@dataclass(frozen=True)
class RepLabel:
    kind: str
    highest_weight: Optional[Vector] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown representation kind {self.kind!r}")
        needs = self.kind in ("MinusculeOrbit", "HighestWeightPairingOnly")
        if needs != (self.highest_weight is not None):
            raise DomainError(f"{self.kind} {'needs' if needs else 'takes no'} highest weight")

    def __str__(self) -> str:
        if self.highest_weight is None:
            return self.kind
        return f"{self.kind}{fmt_vector(self.highest_weight)}"


ADJOINT = RepLabel("Adjoint")
STANDARD = RepLabel("StandardClassical")
SPIN = RepLabel("Spin")
HALF_SPIN_PLUS = RepLabel("HalfSpinPlus")
HALF_SPIN_MINUS = RepLabel("HalfSpinMinus")


def minuscule(lam: Sequence) -> RepLabel:
    return RepLabel("MinusculeOrbit", tuple(Fraction(x) for x in lam))


def pairing_only(lam: Sequence) -> RepLabel:
    return RepLabel("HighestWeightPairingOnly", tuple(Fraction(x) for x in lam))


@dataclass(frozen=True)
class WeightedRep:
    rep: RepLabel
    weights: Tuple[Tuple[Vector, int], ...]

    @property
    def dim(self) -> int:
        return sum(m for _, m in self.weights)

    def multiset(self) -> Counter:
        c: Counter = Counter()
        for w, m in self.weights:
            c[w] += m
        return c


class NonIntegralWeights(DomainError):
    """Some weight pairs with ``nu`` outside ``1/2 Z``; ``weights`` lists them."""

    def __init__(self, weights: List[Vector]):
        self.weights = weights
        shown = ", ".join(fmt_vector(w) for w in weights[:4])
        more = f" and {len(weights) - 4} more" if len(weights) > 4 else ""
        super().__init__(f"weights with 2<chi,nu> not integral: {shown}{more}")


class WeightPattern(Mapping[int, int]):
    """Finitely supported function ``i -> n(i)``; missing indices have multiplicity 0."""

    __slots__ = ("_d",)

    def __init__(self, entries: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        d: Dict[int, int] = {}
        for i, n in items:
            if int(n) < 0:
                raise DomainError("negative multiplicity")
            if n:
                d[int(i)] = d.get(int(i), 0) + int(n)
        self._d = dict(sorted(d.items()))

    def __getitem__(self, i: int) -> int:
        return self._d.get(i, 0)

    def __iter__(self):
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            return self._d == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._d.items()))

    def __repr__(self) -> str:
        return f"WeightPattern({self._d})"

    @property
    def total(self) -> int:
        return sum(self._d.values())

    @property
    def top(self) -> int:
        return max(self._d) if self._d else 0

    def nonnegative(self) -> "WeightPattern":
        return WeightPattern({i: n for i, n in self._d.items() if i >= 0})

    def row(self) -> List[int]:
        """Multiplicities for ``i = 0 .. top``."""
        return [self[i] for i in range(self.top + 1)] if self._d else [0]

    def paper_string(self) -> str:
        return ",".join(str(x) for x in self.row())

    def to_json(self) -> List[List[int]]:
        return [[i, n] for i, n in self._d.items()]

    @classmethod
    def from_json(cls, data: Iterable[Sequence[int]]) -> "WeightPattern":
        return cls((int(i), int(n)) for i, n in data)

    @classmethod
    def from_row(cls, row: Union[str, Sequence[int]]) -> "WeightPattern":
        """Pattern on ``i >= 0`` from the comma-separated table format."""
        if isinstance(row, str):
            try:
                row = [int(x) for x in row.replace(" ", "").split(",") if x != ""]
            except ValueError:
                raise DomainError(f"malformed row {row!r}") from None
        return cls(enumerate(row))


# --- weights --------------------------------------------------------------


def _dual_family(d: RootDatum) -> str:
    return d.simple_type.dual.family


def _signs(n: int) -> Iterable[Tuple[int, ...]]:
    return itertools.product((1, -1), repeat=n)


def _orbit_weights(d: RootDatum, lam: Vector) -> List[Vector]:
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(d.rank):
                y = d.reflect_coweight(i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda w: (-pairing(w, d.rho), w))


def is_minuscule(d: RootDatum, lam: Sequence[Fraction]) -> bool:
    # roots of G pair with the weight lambda of the dual group
    roots = [scale(Fraction(2) / pairing(a, a), a) for a in d.positive_coroots]
    return all(pairing(lam, b) in (-1, 0, 1) for b in roots)


def weights_of(d: RootDatum, r: RepLabel) -> WeightedRep:
    """Weights with multiplicities of the dual-group representation ``r``."""
    fam, n, dim = _dual_family(d), d.rank, d.dim
    one = lambda i, s: tuple(Fraction(s) if k == i else Fraction(0) for k in range(dim))  # noqa: E731
    if r.kind == "Adjoint":
        ws = [(a, 1) for a in d.positive_coroots] + [(scale(-1, a), 1) for a in d.positive_coroots]
        ws.append((d.zero(), d.rank))
    elif r.kind == "StandardClassical":
        if fam == "A":
            ws = [(tuple(Fraction(int(k == i)) - Fraction(1, dim) for k in range(dim)), 1) for i in range(dim)]
        elif fam in "BCD":
            ws = [(one(i, s), 1) for i in range(n) for s in (1, -1)]
            if fam == "B":
                ws.append((d.zero(), 1))
        else:
            raise DomainError(f"no standard representation for dual type {d.simple_type.dual}")
    elif r.kind in ("Spin", "HalfSpinPlus", "HalfSpinMinus"):
        if r.kind == "Spin" and fam not in "BD" or r.kind != "Spin" and fam != "D":
            raise DomainError(f"{r.kind} is not defined for dual type {d.simple_type.dual}")
        ws = []
        for s in _signs(n):
            neg = s.count(-1)
            if r.kind == "HalfSpinPlus" and neg % 2 or r.kind == "HalfSpinMinus" and neg % 2 == 0:
                continue
            ws.append((tuple(HALF * x for x in s), 1))
    elif r.kind == "MinusculeOrbit":
        lam = r.highest_weight
        if len(lam) != dim or not d.in_span(lam):
            raise DomainError("highest weight has the wrong shape")
        if not is_minuscule(d, lam):
            raise DomainError(f"{fmt_vector(lam)} is not minuscule")
        ws = [(w, 1) for w in _orbit_weights(d, lam)]
    else:
        raise DomainError("HighestWeightPairingOnly carries no weight list")
    return WeightedRep(r, tuple(ws))


def _nu_vector(nu) -> Vector:
    return nu.nu if isinstance(nu, ChamberPoint) else tuple(Fraction(x) for x in nu)


def weight_pattern(v: WeightedRep, nu) -> WeightPattern:
    """``n(i)`` = multiplicity of weights with ``2<chi, nu> = i``."""
    x = _nu_vector(nu)
    counts: Dict[int, int] = {}
    bad = []
    for w, m in v.weights:
        k = 2 * pairing(w, x)
        if k.denominator != 1:
            bad.append(w)
            continue
        counts[int(k)] = counts.get(int(k), 0) + m
    if bad:
        raise NonIntegralWeights(bad)
    return WeightPattern(counts)


@lru_cache(maxsize=4096)
def central_pattern(o: NilpotentOrbit, r: RepLabel = ADJOINT) -> WeightPattern:
    return weight_pattern(weights_of(o.datum, r), scale(HALF, o.neutral_element))


def filtration_row(o: NilpotentOrbit) -> WeightPattern:
    """Adjoint pattern of ``h/2`` on ``i >= 0``: the rows of the filtration tables."""
    return central_pattern(o).nonnegative()


def is_adjoint_half_integral(d: RootDatum, nu) -> bool:
    x = _nu_vector(nu)
    return all((pairing(a, x) * 2).denominator == 1 for a in d.simple_coroots)


def is_half_integral(d: RootDatum, nu, r: RepLabel) -> bool:
    """Whether every weight of ``r`` pairs with ``nu`` inside ``1/2 Z``."""
    x = _nu_vector(nu)
    if r.kind == "HighestWeightPairingOnly":
        if not is_adjoint_half_integral(d, x):
            raise DomainError("the pairing shortcut needs an adjoint-half-integral point")
        return (2 * pairing(r.highest_weight, x)).denominator == 1
    return all((2 * pairing(w, x)).denominator == 1 for w, _ in weights_of(d, r).weights)
