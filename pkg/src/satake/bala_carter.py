"""Nilpotent orbits of the exceptional Lie algebras from Bala-Carter data.

An orbit is produced from a Levi subsystem ``J`` of simple roots together
with a distinguished parabolic of that Levi (marks 0/2 on ``J``).  The
generator also derives the reductive centralizer type, and it is the source
of the shipped dataset ``data/exceptional_orbits.json``.

Run ``python -m satake.bala_carter`` to rewrite that file.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .labels import (
    diagram_components,
    format_label,
    identify_component,
    label_key,
)
from .rootdata import (
    ChamberPoint,
    DomainError,
    RootDatum,
    SimpleType,
    Vector,
    build_root_datum,
    dominant_representative,
    inverse,
    fmt_rational,
    lincomb,
    pairing,
    scale,
    solve,
    sub,
)

DATA_PATH = Path(__file__).with_name("data") / "exceptional_orbits.json"
SCHEMA = "satake.exceptional-orbits/1"

# Row order and label spelling of the reference filtration tables.
REFERENCE_ORDER = {
    "G2": ["G2", "G2(a1)", "Ã1", "A1", "1"],
    "F4": [
        "F4", "F4(a1)", "F4(a2)", "C3", "B3", "F4(a3)", "C3(a1)", "A1+Ã2",
        "B2", "Ã1+A2", "Ã2", "A2", "A1+Ã1", "Ã1", "A1", "1",
    ],
    "E8": [
        "E8", "E8(a1)", "E8(a2)", "E8(a3)", "E8(a4)", "E7", "E8(b4)", "E8(a5)",
        "E7(a1)", "E8(b5)", "D7", "E8(a6)", "E7(a2)", "E6+A1", "D7(a1)", "E8(b6)",
        "E7(a3)", "E6(a1)+A1", "A7", "D7(a2)", "E6", "D6", "D5+A2", "E6(a1)",
        "E7(a4)", "A6+A1", "D6(a1)", "A6", "E8(a7)", "D5+A1", "E7(a5)",
        "E6(a3)+A1", "D6(a2)", "D5(a1)+A2", "A5+A1", "A4+A3", "D5", "E6(a3)",
        "D4+A2", "A4+A2+A1", "D5(a1)+A1", "A5", "A4+A2", "A4+2A1", "D5(a1)",
        "2A3", "A4+A1", "D4(a1)+A2", "D4+A1", "A3+A2+A1", "A4", "A3+A2",
        "D4(a1)+A1", "A3+2A1", "2A2+2A1", "D4", "D4(a1)", "A3+A1", "2A2+A1",
        "2A2", "A2+3A1", "A3", "A2+2A1", "A2+A1", "4A1", "A2", "3A1", "2A1",
        "A1", "1",
    ],
}

# Centralizer types printed alongside the extraneous points; other rows are derived.
PRINTED_CENTRALIZERS = {
    ("F4", "B3"): "A1",
    ("F4", "A1+Ã1"): "A1+A1",
    ("E7", "D5(a1)+A1"): "A1",
    ("E8", "D6"): "B2",
    ("E8", "A6"): "2A1",
    ("E8", "A4+A2"): "2A1",
    ("E8", "A2+2A1"): "B3+A1",
}


@dataclass(frozen=True)
class RawOrbit:
    label: str
    marks: Tuple[int, ...]
    h: Vector
    dimension: int
    centralizer: str
    levi: Tuple[int, ...]
    levi_marks: Tuple[int, ...]


def grading_counts(d: RootDatum, h: Sequence[Fraction]) -> Dict[int, int]:
    """Dimensions of the ``ad h`` eigenspaces of the dual Lie algebra (all eigenvalues)."""
    counts: Dict[int, int] = defaultdict(int)
    counts[0] += d.rank
    for a in d.positive_coroots:
        k = pairing(a, h)
        if k.denominator != 1:
            raise DomainError("non-integral grading")
        counts[int(k)] += 1
        counts[-int(k)] += 1
    return dict(counts)


def orbit_dimension(d: RootDatum, h: Sequence[Fraction]) -> int:
    c = grading_counts(d, h)
    return d.dimension - c.get(0, 0) - c.get(1, 0)


def _levi_neutral(d: RootDatum, J: Sequence[int], marks: Dict[int, int]) -> Vector:
    cor = [d.simple_coroots[j] for j in J]
    gram = [[pairing(a, b) for a in cor] for b in cor]
    y = solve(gram, [Fraction(marks[j]) for j in J])
    return lincomb(y, cor)


def _is_distinguished(d: RootDatum, J: Sequence[int], marks: Dict[int, int]) -> bool:
    Jset = set(J)
    g0, g2 = len(J), 0
    for b in d.coroot_coefficients:
        if any(b[k] for k in range(d.rank) if k not in Jset):
            continue
        grade = sum(b[j] * marks[j] for j in J)
        if grade == 0:
            g0 += 2
        elif grade == 2:
            g2 += 1
    return g0 == g2


def _sub_cartan(vectors: Sequence[Vector]) -> List[List[int]]:
    return [[int(2 * pairing(a, b) / pairing(b, b)) for b in vectors] for a in vectors]


def _levi_components(d: RootDatum, J: Sequence[int], marks: Dict[int, int], longest) -> List:
    cor = [d.simple_coroots[j] for j in J]
    cartan = _sub_cartan(cor)
    comps = []
    for comp in diagram_components(cartan):
        sub_c = [[cartan[i][j] for j in comp] for i in comp]
        lengths = [pairing(cor[i], cor[i]) for i in comp]
        fam, rank, short = identify_component(sub_c, lengths, longest)
        zeros = sum(1 for i in comp if marks[J[i]] == 0)
        comps.append((fam, rank, short, f"a{zeros}" if zeros else ""))
    return comps


def centralizer_roots(d: RootDatum, J: Sequence[int], h: Vector):
    """Simple roots of the sl2 centralizer, grouped by simple factor, plus the torus rank.

    The centralizer's Cartan subalgebra is the orthogonal complement of ``J``;
    its roots are the projections ``mu`` of roots with one sl2-invariant line.
    """
    cor = [d.simple_coroots[j] for j in J]
    if cor:
        ginv = inverse([[pairing(a, b) for a in cor] for b in cor])

        def proj(x: Vector) -> Vector:
            p = [pairing(c, x) for c in cor]
            y = [sum(g * q for g, q in zip(row, p)) for row in ginv]
            return sub(x, lincomb(y, cor))
    else:
        proj = lambda x: tuple(x)  # noqa: E731
    dims: Dict[Vector, int] = defaultdict(int)
    for a in d.positive_coroots:
        for s in (a, scale(-1, a)):
            mu = proj(s)
            if not any(mu):
                continue
            g = pairing(s, h)
            if g == 0:
                dims[mu] += 1
            elif g == 2:
                dims[mu] -= 1
    if any(k not in (0, 1) for k in dims.values()):
        raise DomainError("unexpected centralizer root multiplicity")
    positive = sorted(mu for mu, k in dims.items() if k and next(x for x in mu if x) > 0)
    pos_set = set(positive)
    simple = [mu for mu in positive if not any(sub(mu, nu) in pos_set for nu in positive if nu != mu)]
    factors = []
    if simple:
        cartan = _sub_cartan(simple)
        for comp in diagram_components(cartan):
            sub_c = [[cartan[i][j] for j in comp] for i in comp]
            lengths = [pairing(simple[i], simple[i]) for i in comp]
            fam, rank, _ = identify_component(sub_c, lengths)
            factors.append(((fam, rank), [simple[i] for i in comp]))
    return factors, d.rank - len(J) - len(simple)


def centralizer_type(d: RootDatum, J: Sequence[int], h: Vector) -> str:
    """Type of the reductive centralizer of the sl2 attached to a distinguished orbit of the Levi ``J``."""
    factors, torus = centralizer_roots(d, J, h)
    comps = [(fam, rank, False, "") for (fam, rank), _ in factors]
    label = format_label(comps) if comps else ""
    if torus:
        label = (label + "+" if label else "") + f"T{torus}"
    return label or "0"


def _raw_orbits(t: SimpleType) -> List[Tuple]:
    d = build_root_datum(t)
    r = d.rank
    lengths = [pairing(a, a) for a in d.simple_coroots]
    longest = max(lengths) if len(set(lengths)) > 1 else None
    found: Dict[Vector, Tuple] = {}
    for size in range(r + 1):
        for J in itertools.combinations(range(r), size):
            for zeros in itertools.product((0, 2), repeat=size):
                marks = dict(zip(J, zeros))
                if not _is_distinguished(d, J, marks):
                    continue
                hJ = _levi_neutral(d, J, marks) if J else d.zero()
                hdom = dominant_representative(ChamberPoint(d, hJ)).nu
                if hdom in found:
                    continue
                comps = _levi_components(d, J, marks, longest)
                found[hdom] = (comps, J, hJ, tuple(zeros))
    return [(h, *v) for h, v in found.items()]


def generate(t: SimpleType) -> List[RawOrbit]:
    """All nilpotent orbits of the exceptional dual Lie algebra of type ``t``."""
    if not t.is_exceptional:
        raise DomainError(f"{t} is not exceptional")
    d = build_root_datum(t)
    raw = _raw_orbits(t)
    groups: Dict[str, List] = defaultdict(list)
    for h, comps, J, hJ, lm in raw:
        dim = orbit_dimension(d, h)
        groups[format_label(comps)].append((dim, h, comps, J, hJ, lm))
    out = []
    for base, members in groups.items():
        members.sort(key=lambda m: -m[0])
        if len(members) > 2:
            raise DomainError(f"more than two orbits labelled {base}")
        for k, (dim, h, comps, J, hJ, lm) in enumerate(members):
            if len(members) == 1:
                label = base
            elif any(c[3] for c in comps):
                # a/b distinguish distinguished parabolics with equally many zeros
                letter = "ab"[k]
                label = format_label([(f, n, s, letter + z[1:] if z else z) for f, n, s, z in comps])
            else:
                label = format_label(comps, "'" if k == 0 else "''")
            marks = tuple(int(x) for x in d.fundamental_coordinates(h))
            out.append(RawOrbit(label, marks, h, dim, centralizer_type(d, J, hJ), J, lm))
    ref = REFERENCE_ORDER.get(str(t))
    if ref is not None:
        by_key = {label_key(o.label): o for o in out}
        if len(by_key) != len(out) or set(by_key) != {label_key(x) for x in ref}:
            raise DomainError(f"generated labels for {t} do not match the reference list")
        out = [replace(by_key[label_key(lab)], label=lab) for lab in ref]
    else:
        out.sort(key=lambda o: (-o.dimension, o.label))
    return out


def dataset() -> dict:
    doc = {"schema": SCHEMA, "types": {}}
    for name in ("G2", "F4", "E6", "E7", "E8"):
        t = SimpleType.parse(name)
        rows = []
        for o in generate(t):
            rows.append(
                {
                    "label": o.label,
                    "marks": list(o.marks),
                    "h": [fmt_rational(x) for x in o.h],
                    "dimension": o.dimension,
                    "centralizer": o.centralizer,
                    "centralizer_source": "printed" if (name, o.label) in PRINTED_CENTRALIZERS else "derived",
                    "levi": [j + 1 for j in o.levi],
                    "levi_marks": list(o.levi_marks),
                }
            )
        doc["types"][name] = rows
    return doc


def write_dataset(path: Path = DATA_PATH) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(dataset(), indent=1, ensure_ascii=False) + "\n", encoding="utf-8")


if __name__ == "__main__":
    write_dataset()
