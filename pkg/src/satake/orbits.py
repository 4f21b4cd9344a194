"""Nilpotent orbits of the dual Lie algebra and their neutral elements.

An orbit's ``ambient`` is the type of the dual group; the neutral element
``h`` is stored dominant, in the coordinates of the root datum of the group
itself (the dual of the ambient type).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .bala_carter import DATA_PATH, SCHEMA, orbit_dimension
from .labels import same_label
from .rootdata import (
    ChamberPoint,
    DomainError,
    RootDatum,
    SimpleType,
    Vector,
    build_root_datum,
    dominant_representative,
    fmt_rational,
)


@dataclass(frozen=True, eq=False)
class NilpotentOrbit:
    ambient: SimpleType
    label: str
    neutral_element: Vector
    centralizer_type: Tuple[str, ...] = ()
    very_even_tag: Optional[str] = None
    dimension: int = 0
    partition: Optional[Tuple[int, ...]] = None
    centralizer_source: str = "derived"
    marks: Tuple[int, ...] = field(default=())

    @property
    def datum(self) -> RootDatum:
        return build_root_datum(self.ambient.dual)

    @property
    def key(self) -> Tuple:
        return (self.ambient, self.label, self.very_even_tag)

    def __eq__(self, other) -> bool:
        return isinstance(other, NilpotentOrbit) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def name(self) -> str:
        return self.label + (f" {self.very_even_tag}" if self.very_even_tag else "")

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "label": self.label,
            "very_even_tag": self.very_even_tag,
            "partition": list(self.partition) if self.partition else None,
            "h": [fmt_rational(x) for x in self.neutral_element],
            "marks": list(self.marks),
            "dimension": self.dimension,
            "centralizer": list(self.centralizer_type),
            "centralizer_source": self.centralizer_source,
        }


# --- classical ------------------------------------------------------------


def _standard_size(t: SimpleType) -> int:
    n = t.rank
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t.family]


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``n`` in nonincreasing order, lexicographically decreasing."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def is_valid_partition(family: str, lam: Sequence[int]) -> bool:
    mult = Counter(lam)
    if family == "A":
        return True
    if family == "C":
        return all(r % 2 == 0 for part, r in mult.items() if part % 2 == 1)
    return all(r % 2 == 0 for part, r in mult.items() if part % 2 == 0)


def is_very_even(lam: Sequence[int]) -> bool:
    mult = Counter(lam)
    return all(part % 2 == 0 and r % 2 == 0 for part, r in mult.items())


def _eigenvalues(lam: Sequence[int]) -> List[int]:
    out: List[int] = []
    for d in lam:
        out.extend(range(d - 1, -d, -2))
    return sorted(out, reverse=True)


def classical_neutral_element(ambient: SimpleType, lam: Sequence[int], tag: Optional[str] = None) -> Vector:
    """Dominant ``h`` of the orbit with Jordan type ``lam``."""
    ev = _eigenvalues(lam)
    n = ambient.rank
    if ambient.family == "A":
        return tuple(Fraction(x) for x in ev)
    top = sorted(ev[:n])
    h = [Fraction(x) for x in top]
    if tag == "II":
        h[0] = -h[0]
    return tuple(h)


def _centralizer_classical(family: str, lam: Sequence[int]) -> Tuple[str, ...]:
    mult = sorted(Counter(lam).items(), reverse=True)
    out = []
    for part, r in mult:
        if family == "A":
            out.append(f"GL({r})")
        elif family == "C":
            out.append(f"Sp({r})" if part % 2 == 1 else f"O({r})")
        else:
            out.append(f"so({r})" if part % 2 == 1 else f"sp({r})")
    return tuple(out)


def partition_label(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)


def parse_partition(text: str) -> Tuple[int, ...]:
    try:
        lam = tuple(sorted((int(x) for x in text.replace(" ", "").split(",") if x), reverse=True))
    except ValueError:
        raise DomainError(f"malformed partition {text!r}") from None
    if not lam or any(x <= 0 for x in lam):
        raise DomainError(f"malformed partition {text!r}")
    return lam


def _classical_orbit(ambient: SimpleType, lam: Tuple[int, ...], tag: Optional[str]) -> NilpotentOrbit:
    d = build_root_datum(ambient.dual)
    h = classical_neutral_element(ambient, lam, tag)
    return NilpotentOrbit(
        ambient=ambient,
        label=partition_label(lam),
        neutral_element=h,
        centralizer_type=_centralizer_classical(ambient.family, lam),
        very_even_tag=tag,
        dimension=orbit_dimension(d, h),
        partition=lam,
        marks=tuple(int(x) for x in d.fundamental_coordinates(h)),
    )


@lru_cache(maxsize=None)
def _classical_orbits(ambient: SimpleType) -> Tuple[NilpotentOrbit, ...]:
    N = _standard_size(ambient)
    out = []
    for lam in partitions(N):
        if not is_valid_partition(ambient.family, lam):
            continue
        if ambient.family == "D" and is_very_even(lam):
            out.append(_classical_orbit(ambient, lam, "I"))
            out.append(_classical_orbit(ambient, lam, "II"))
        else:
            out.append(_classical_orbit(ambient, lam, None))
    return tuple(out)


def classical_orbits(t: SimpleType, N: Optional[int] = None) -> List[NilpotentOrbit]:
    """All nilpotent orbits of the classical dual Lie algebra ``t`` (standard module of size ``N``)."""
    if t.family not in "ABCD":
        raise DomainError(f"{t} is not a classical type")
    if N is not None and N != _standard_size(t):
        raise DomainError(f"{t} has standard representation of size {_standard_size(t)}, not {N}")
    return list(_classical_orbits(t))


# --- exceptional ----------------------------------------------------------


@lru_cache(maxsize=1)
def load_dataset() -> dict:
    doc = json.loads(DATA_PATH.read_text(encoding="utf-8"))
    if doc.get("schema") != SCHEMA:
        raise DomainError(f"unexpected dataset schema {doc.get('schema')!r}")
    return doc


@lru_cache(maxsize=None)
def _exceptional(t: SimpleType) -> Tuple[NilpotentOrbit, ...]:
    rows = load_dataset()["types"][str(t)]
    out = []
    for r in rows:
        out.append(
            NilpotentOrbit(
                ambient=t,
                label=r["label"],
                neutral_element=tuple(Fraction(x) for x in r["h"]),
                centralizer_type=tuple(x for x in r["centralizer"].split("+") if x != "0"),
                dimension=r["dimension"],
                centralizer_source=r["centralizer_source"],
                marks=tuple(r["marks"]),
            )
        )
    return tuple(out)


def exceptional_catalog(t: SimpleType) -> List[NilpotentOrbit]:
    """The bundled catalog for an exceptional dual type."""
    if not t.is_exceptional:
        raise DomainError(f"{t} is not exceptional")
    return list(_exceptional(t))


def catalog(t: SimpleType) -> List[NilpotentOrbit]:
    return exceptional_catalog(t) if t.is_exceptional else classical_orbits(t)


def find_orbit(t: SimpleType, label: str, tag: Optional[str] = None) -> NilpotentOrbit:
    """Look up an orbit by label; labels compare as multisets of components."""
    text = label.strip()
    if tag is None:
        for suffix in (" II", " I", "_II", "_I"):
            if text.endswith(suffix):
                text, tag = text[: -len(suffix)], suffix.strip(" _")
                break
    if t.is_exceptional:
        hits = [o for o in exceptional_catalog(t) if same_label(o.label, text)]
    else:
        lam = parse_partition(text)
        hits = [o for o in classical_orbits(t) if o.partition == lam]
        if len(hits) == 2:
            if tag is None:
                raise DomainError(f"very even partition {text} needs a tag I or II")
            hits = [o for o in hits if o.very_even_tag == tag]
    if not hits:
        raise DomainError(f"unknown orbit {label!r} for {t}")
    return hits[0]


def neutral_element(o: NilpotentOrbit) -> Vector:
    """Dominant neutral element of ``o``."""
    if o.partition is not None:
        h = classical_neutral_element(o.ambient, o.partition, o.very_even_tag)
    else:
        h = find_orbit(o.ambient, o.label).neutral_element
    return dominant_representative(ChamberPoint(o.datum, h)).nu
