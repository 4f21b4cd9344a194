"""Half-integral generic unitary points, chamber regions, and central/extraneous points.

Points live in the weight space of the split adjoint group ``G``; coroots of
``G`` are the roots of the dual Lie algebra, and pairings are dot products.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .orbits import NilpotentOrbit, find_orbit
from .repweights import (
    SPIN,
    STANDARD,
    RepLabel,
    is_adjoint_half_integral,
    is_half_integral,
)
from .rootdata import (
    HALF,
    ChamberPoint,
    DomainError,
    SimpleType,
    Vector,
    build_root_datum,
    coroot_level,
    dominant_representative,
    fmt_fundamental,
    fold,
    pairing,
    scale,
    vec,
)

# --- alcove and hyperplane tests ------------------------------------------


def fundamental_alcove_test(p: ChamberPoint) -> bool:
    """Dominant and strictly below the highest-coroot wall."""
    return p.is_dominant() and pairing(p.datum.highest_coroot, p.nu) < 1


def integral_point_nonunitary(p: ChamberPoint) -> bool:
    """True when some positive coroot pairs with ``nu`` to a positive integer."""
    for a in p.datum.positive_coroots:
        k = pairing(a, p.nu)
        if k > 0 and k.denominator == 1:
            return True
    return False


def on_reducibility_hyperplane(p: ChamberPoint) -> List[Vector]:
    """Positive coroots with ``<a, nu> = 1``."""
    return [a for a in p.datum.positive_coroots if pairing(a, p.nu) == 1]


# --- maximal level bounds -------------------------------------------------


@dataclass(frozen=True)
class LevelBound:
    simple_type: SimpleType
    r0: int
    level_r0_coroots: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        d = build_root_datum(self.simple_type)
        for a in self.level_r0_coroots:
            if coroot_level(d, a) != self.r0:
                raise DomainError(f"coroot {a} of {self.simple_type} is not at level {self.r0}")

    def satisfied(self, nu: Sequence[Fraction]) -> bool:
        return all(pairing(a, nu) < 1 for a in self.level_r0_coroots)


def _eps(n: int, *terms) -> Vector:
    v = [Fraction(0)] * n
    for i, s in terms:
        v[i - 1] += s
    return tuple(v)


_H = HALF
_EXCEPTIONAL_BOUNDS = {
    ("G", 2): (3, [vec(Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3))]),
    ("F", 4): (9, [vec(1, 1, 1, -1)]),
    ("E", 6): (9, [vec(-_H, _H, -_H, _H, _H, -_H, -_H, _H)]),
    ("E", 7): (
        9,
        [
            vec(-_H, _H, -_H, _H, _H, -_H, -_H, _H),
            vec(-_H, _H, _H, -_H, -_H, _H, -_H, _H),
            vec(_H, -_H, -_H, _H, -_H, _H, -_H, _H),
            vec(0, 0, 0, 0, 1, 1, 0, 0),
        ],
    ),
    ("E", 8): (
        15,
        [
            vec(_H, -_H, _H, _H, _H, _H, -_H, _H),
            vec(_H, _H, -_H, _H, _H, -_H, _H, _H),
            vec(_H, _H, _H, -_H, -_H, _H, _H, _H),
            vec(-_H, -_H, -_H, _H, -_H, _H, _H, _H),
        ],
    ),
}


def max_level_bound(t: SimpleType) -> LevelBound:
    """The maximal level ``r0`` with the coroots whose walls bound the generic unitary set."""
    f, n = t.family, t.rank
    d = build_root_datum(t)
    one = Fraction(1)
    if f == "A":
        # PGL(n+1): the unitary set is the hermitian part of the fundamental alcove
        return LevelBound(t, n, (d.highest_coroot,))
    if f == "B":
        return LevelBound(t, 2 * n - 1, (_eps(n, (n, 2 * one)),))
    if f == "C":
        if n % 2:
            cor = [_eps(n, (i, one), (n - i, one)) for i in range(1, (n - 1) // 2 + 1)]
            cor.append(_eps(n, (n, one)))
            return LevelBound(t, n, tuple(cor))
        cor = [_eps(n, (i, one), (n + 1 - i, one)) for i in range(1, n // 2 + 1)]
        return LevelBound(t, n + 1, tuple(cor))
    if f == "D":
        if n % 2 == 0:
            cor = [_eps(n, (1, one), (n, one)), _eps(n, (1, -one), (n, one))]
            cor += [_eps(n, (i, one), (n + 1 - i, one)) for i in range(2, n // 2 + 1)]
            return LevelBound(t, n - 1, tuple(cor))
        # odd rank: every coroot of level n-1 (no explicit list is printed)
        cor = [a for a in d.positive_coroots if d.level(a) == n - 1]
        return LevelBound(t, n - 1, tuple(cor))
    key = (f, n)
    if key not in _EXCEPTIONAL_BOUNDS:
        raise DomainError(f"no level bound recorded for {t}")
    r0, cor = _EXCEPTIONAL_BOUNDS[key]
    return LevelBound(t, r0, tuple(cor))


# --- half-integral generic unitary points ---------------------------------


def _hermitian_coords(t: SimpleType, c: Sequence[int]) -> bool:
    f, n = t.family, t.rank
    if f == "A":
        return all(c[i] == c[n - 1 - i] for i in range(n))
    if f == "D" and n % 2:
        return c[0] == c[1]
    if f == "E" and n == 6:
        return c[0] == c[5] and c[2] == c[4]
    return True


def _check_supported(t: SimpleType) -> None:
    if t.family == "A" and t.rank < 1 or t.family == "D" and t.rank < 3:
        raise DomainError(f"{t} is not covered by the half-integral classification")


def half_integral_candidates(t: SimpleType) -> List[Tuple[Tuple[int, ...], str]]:
    """Every ``{0, 1/2}`` point with the reason it is kept or dropped (doubled coordinates)."""
    _check_supported(t)
    d = build_root_datum(t)
    bound = max_level_bound(t)
    bound_coeffs = [d.coroot_coefficients[d._index[a]] for a in bound.level_r0_coroots]
    top = d.coroot_coefficients[-1]
    out = []
    for c in itertools.product((0, 1), repeat=d.rank):
        if not _hermitian_coords(t, c):
            out.append((c, "not hermitian"))
            continue
        dot = lambda b: sum(x * y for x, y in zip(b, c))  # noqa: E731
        if any(dot(b) >= 2 for b in bound_coeffs):
            out.append((c, f"level {bound.r0} bound"))
            continue
        if t.family == "A" and d.from_fundamental([HALF * x for x in c])[0] >= HALF:
            # standard coordinates (a1, ..., -a1) with a1 < 1/2
            out.append((c, "a1 bound"))
            continue
        hit = [b for b in d.coroot_coefficients if dot(b) == 2]
        if hit:
            out.append((c, "reducibility hyperplane"))
            continue
        if dot(top) >= 2:
            out.append((c, "outside fundamental alcove"))
            continue
        out.append((c, "unitary"))
    return out


def half_integral_unitary_points(t: SimpleType) -> FrozenSet[ChamberPoint]:
    """Adjoint-half-integral points of the generic spherical unitary set."""
    d = build_root_datum(t)
    pts = []
    for c, verdict in half_integral_candidates(t):
        if verdict == "unitary":
            pts.append(ChamberPoint.from_fundamental(d, [HALF * x for x in c]))
    return frozenset(pts)


def point_label(p: ChamberPoint) -> str:
    return fmt_fundamental(p.fundamental_coordinates)


def sorted_points(points) -> List[ChamberPoint]:
    return sorted(points, key=lambda p: (sum(p.fundamental_coordinates), tuple(-x for x in p.fundamental_coordinates)))


def half_other_pairings(t: SimpleType) -> List[Tuple[ChamberPoint, int, Fraction]]:
    """For each nonzero half-integral unitary point, the pairing with its discriminating fundamental coweight.

    Coweight indices are 1-based in the numbering of the root datum.
    """
    d = build_root_datum(t)
    f, n = t.family, t.rank
    out = []
    for p in sorted_points(half_integral_unitary_points(t)):
        if not any(p.nu):
            continue
        k = next(i for i, x in enumerate(p.fundamental_coordinates) if x) + 1
        if f == "A":
            j = 1
        elif f == "B":
            j = n
        elif f == "C":
            j = 1
        elif f == "D":
            j = 1 if k == n else n
        elif (f, n) == ("E", 7):
            j = 7
        else:
            raise DomainError(f"no discriminating coweight for {t}")
        out.append((p, j, pairing(d.fundamental_coweights[j - 1], p.nu)))
    return out


# --- chamber regions ------------------------------------------------------


def region_count_formula(t: SimpleType) -> int:
    d = build_root_datum(t)
    h = d.coxeter_number
    num = prod(x + h for x in d.degrees)
    den = prod(d.degrees)
    if num % den:
        raise DomainError("region formula is not integral")
    return num // den


def enumerate_chamber_regions(t: SimpleType, dilation: Optional[int] = None) -> int:
    """Count regions of the fundamental chamber cut by the walls ``<a, nu> = 1``.

    Each open alcove has exactly one point of the lattice ``(1/h) P`` in its
    interior, and every region is a union of alcoves.  The points inside the
    dilated alcove ``dilation * A0`` (default ``2h``) are enumerated with
    integer arithmetic and their side vectors are counted.
    """
    d = build_root_datum(t)
    if d.rank > 4:
        raise DomainError("exact region enumeration is limited to rank 4")
    h = d.coxeter_number
    K = dilation or 2 * h
    B = np.array(d.coroot_coefficients, dtype=np.int64)
    marks = B[-1]
    limit = K * h
    weights = np.array([1 << k for k in range(len(B))], dtype=object if len(B) > 62 else np.int64)
    seen = set()

    def scan(prefix: List[int], used: int) -> None:
        i = len(prefix)
        rest = d.rank - i
        if rest <= 3:
            ranges = []
            for j in range(i, d.rank):
                others = sum(int(m) for m in marks[j + 1:]) + sum(int(m) for m in marks[i:j])
                hi = (limit - used - others - 1) // int(marks[j])
                if hi < 1:
                    return
                ranges.append(np.arange(1, hi + 1, dtype=np.int64))
            grids = np.meshgrid(*ranges, indexing="ij")
            tail = np.stack([g.ravel() for g in grids], axis=1)
            if prefix:
                head = np.tile(np.array(prefix, dtype=np.int64), (len(tail), 1))
                pts = np.concatenate([head, tail], axis=1)
            else:
                pts = tail
            pts = pts[pts @ marks < limit]
            P = pts @ B.T
            ok = np.all(P % h != 0, axis=1)
            signs = (P[ok] > h).astype(np.int64)
            seen.update((signs @ weights).tolist())
            return
        others = sum(int(m) for m in marks[i + 1:])
        c = 1
        while used + int(marks[i]) * c + others < limit:
            scan(prefix + [c], used + int(marks[i]) * c)
            c += 1

    scan([], 0)
    return len(seen)


def count_chamber_regions(t: SimpleType, verify: bool = False) -> int:
    """Number of open regions of the fundamental chamber cut by the hyperplanes ``<a, nu> = 1``."""
    m = region_count_formula(t)
    if verify:
        e = enumerate_chamber_regions(t)
        if e != m:
            raise DomainError(f"region formula {m} disagrees with enumeration {e} for {t}")
    return m


# --- central and extraneous points ----------------------------------------


def central_point(o: NilpotentOrbit) -> ChamberPoint:
    """The dominant point ``h/2`` of the orbit."""
    return dominant_representative(ChamberPoint(o.datum, scale(HALF, o.neutral_element)))


@dataclass(frozen=True)
class ExtraneousCatalogEntry:
    ambient: SimpleType
    orbit: NilpotentOrbit
    re_s: ChamberPoint
    eps: Optional[Tuple[Tuple[int, int], ...]] = None
    centralizer: str = ""
    printed_re_s: Optional[Vector] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not is_adjoint_half_integral(self.re_s.datum, self.re_s.nu):
            raise DomainError("extraneous point is not adjoint-half-integral")
        if self.re_s == central_point(self.orbit):
            raise DomainError("extraneous point equals the central point")

    @property
    def fundamental(self) -> Vector:
        return self.re_s.fundamental_coordinates

    def to_json(self) -> dict:
        from .rootdata import fmt_rational

        doc = {
            "ambient": str(self.ambient),
            "orbit": self.orbit.name,
            "centralizer": self.centralizer,
            "re_s": fmt_fundamental(self.fundamental),
            "re_s_coordinates": [fmt_rational(x) for x in self.re_s.nu],
            "central_point": fmt_fundamental(central_point(self.orbit).fundamental_coordinates),
        }
        if self.eps is not None:
            doc["eps"] = {str(part): e for part, e in self.eps}
        if self.printed_re_s is not None:
            doc["printed_re_s"] = fmt_fundamental(self.printed_re_s)
        return doc


# (dual type, orbit) -> (centralizer as printed, Re(s) fundamental coordinates, printed coordinates if different)
EXCEPTIONAL_EXTRANEOUS: Dict[Tuple[str, str], Tuple[str, Tuple, Optional[Tuple]]] = {
    # printed as w1 + w2 + 1/2 w3 + 1/2 w4, which does not give the recorded elimination data
    ("F4", "B3"): ("A1", (1, 0, _H, _H), (1, 1, _H, _H)),
    ("F4", "A1+Ã1"): ("A1+A1", (_H, 0, 0, _H), None),
    ("E7", "D5(a1)+A1"): ("A1", (_H, _H, _H, 0, 0, _H, _H), None),
    ("E8", "D6"): ("B2", (1, 0, 0, _H, 0, _H, 0, 1), None),
    ("E8", "A6"): ("2A1", (_H, 0, 0, _H, 0, 0, _H, _H), None),
    ("E8", "A4+A2"): ("2A1", (_H, 0, 0, 0, _H, 0, 0, _H), None),
    ("E8", "A2+2A1"): ("B3+A1", (0, _H, 0, 0, 0, 0, 0, _H), None),
}


def _exceptional_entries(o: NilpotentOrbit) -> List[ExtraneousCatalogEntry]:
    from .labels import same_label

    out = []
    for (tname, label), (z, coords, printed) in EXCEPTIONAL_EXTRANEOUS.items():
        if tname == str(o.ambient) and same_label(label, o.label):
            p = ChamberPoint.from_fundamental(o.datum, coords)
            out.append(
                ExtraneousCatalogEntry(
                    o.ambient,
                    o,
                    p,
                    centralizer=z,
                    printed_re_s=tuple(Fraction(x) for x in printed) if printed else None,
                )
            )
    return out


def _selectable_parts(o: NilpotentOrbit) -> List[int]:
    """Parts ``j`` whose multiplicity space carries an orthogonal factor of rank at least 1."""
    lam = Counter(o.partition)
    parity = 0 if o.ambient.family == "C" else 1
    return sorted((j for j, r in lam.items() if j % 2 == parity and r >= 3), reverse=True)


def shifted_point(o: NilpotentOrbit, eps: Dict[int, int]) -> ChamberPoint:
    """``h/2`` with one pair of blocks of each selected size pushed apart by ``1/2``."""
    vals: List[Fraction] = []
    for j, r in sorted(Counter(o.partition).items(), reverse=True):
        for copy in range(r):
            shift = Fraction(0)
            if eps.get(j):
                shift = HALF if copy == 0 else (-HALF if copy == 1 else Fraction(0))
            vals.extend(Fraction(j - 1 - 2 * m, 2) + shift for m in range(j))
    n = o.ambient.rank
    top = sorted(vals, reverse=True)[:n]
    return dominant_representative(ChamberPoint(o.datum, tuple(sorted(top))))


def classical_candidates(o: NilpotentOrbit) -> List[Tuple[Tuple[Tuple[int, int], ...], ChamberPoint]]:
    """All nonzero selections of parts, before the parity rule, with their points."""
    if o.partition is None or o.ambient.family not in "BCD":
        return []
    parts = _selectable_parts(o)
    out = []
    for bits in itertools.product((0, 1), repeat=len(parts)):
        if not any(bits):
            continue
        eps = dict(zip(parts, bits))
        out.append((tuple(zip(parts, bits)), shifted_point(o, eps)))
    return out


def _classical_entries(o: NilpotentOrbit) -> List[ExtraneousCatalogEntry]:
    out = []
    for eps, p in classical_candidates(o):
        if o.ambient.family in "BD" and sum(e for _, e in eps) % 2:
            continue
        out.append(ExtraneousCatalogEntry(o.ambient, o, p, eps=eps, centralizer="+".join(o.centralizer_type)))
    return out


def extraneous_points(o: NilpotentOrbit) -> List[ExtraneousCatalogEntry]:
    """Geometric unitary points of the complementary series of ``o`` other than its central point."""
    if o.partition is not None:
        return _classical_entries(o)
    return _exceptional_entries(o)


def extraneous_catalog(t: SimpleType) -> List[ExtraneousCatalogEntry]:
    from .orbits import catalog

    return [e for o in catalog(t) for e in extraneous_points(o)]


def exceptional_extraneous_orbits() -> List[NilpotentOrbit]:
    return [find_orbit(SimpleType.parse(t), label) for t, label in EXCEPTIONAL_EXTRANEOUS]


# --- the 4A1 region in E8 -------------------------------------------------


def _four(nu: Sequence) -> Tuple[Fraction, ...]:
    v = tuple(Fraction(x) for x in nu)
    if len(v) != 4:
        raise DomainError("expected four coordinates")
    if not (0 <= v[0] <= v[1] <= v[2] <= v[3]):
        raise DomainError("coordinates must satisfy 0 <= nu1 <= nu2 <= nu3 <= nu4")
    return v


def cs_e8_4a1_extra_region(nu: Sequence) -> bool:
    n1, n2, n3, n4 = _four(nu)
    return (
        n1 + n4 < 1
        and n2 + n3 < 1
        and n2 + n4 > 1
        and -n1 + n3 + n4 < Fraction(3, 2) < n1 + n3 + n4
    )


def cs_e8_4a1_member(nu: Sequence) -> bool:
    """Membership in the complementary series of ``4A1`` in ``E8`` (ordered coordinates)."""
    v = _four(nu)
    return v[3] < HALF or cs_e8_4a1_extra_region(v)


E8_4A1_HALF_H = (Fraction(0), Fraction(1), -HALF, HALF, -HALF, HALF, Fraction(0), Fraction(0))


def e8_4a1_point(nu: Sequence) -> ChamberPoint:
    """The E8 parameter attached to ordered ``4A1`` coordinates."""
    n1, n2, n3, n4 = _four(nu)
    shift = (0, 0, n1, n1, n2, n2, -n3 + n4, n3 + n4)
    d = build_root_datum(SimpleType("E", 8))
    return ChamberPoint(d, tuple(a + b for a, b in zip(E8_4A1_HALF_H, shift)))


def quarter_grid_extra_members(bound: Fraction = Fraction(2)) -> List[Tuple[Fraction, ...]]:
    """Ordered points of ``(1/4) Z`` with ``nu4 < bound`` inside the extra region."""
    q = Fraction(1, 4)
    top = int(bound / q)
    hits = []
    for a in range(top):
        for b in range(a, top):
            for c in range(b, top):
                for e in range(c, top):
                    nu = (a * q, b * q, c * q, e * q)
                    if cs_e8_4a1_extra_region(nu):
                        hits.append(nu)
    return hits


# --- quasi-split reduction ------------------------------------------------


@dataclass(frozen=True)
class Elimination:
    point: ChamberPoint
    rep: str
    eliminated: bool
    reason: str


@dataclass(frozen=True)
class QuasiSplitReduction:
    simple_type: SimpleType
    tau_order: int
    folded: SimpleType
    candidates: FrozenSet[ChamberPoint]
    points: FrozenSet[ChamberPoint]
    trace: Tuple[Elimination, ...]


def _discriminator(t: SimpleType, folded: SimpleType) -> Optional[Tuple[RepLabel, str]]:
    """Representation of the dual of the folded group that comes from the ambient dual group."""
    if t.family == "A" and t.rank % 2 == 1:
        return STANDARD, "vector representation restricts to the defining representation"
    if t.family == "D":
        return SPIN, "half-spin representations restrict to the spin representation"
    return None


def quasi_split_reduction(t: SimpleType, tau_order: int) -> QuasiSplitReduction:
    """Half-integral unitary points of a quasi-split unramified group through its folding."""
    folded = fold(t, tau_order)
    cands = half_integral_unitary_points(folded)
    d = build_root_datum(folded)
    disc = _discriminator(t, folded) if tau_order == 2 else None
    trace = []
    keep = set()
    for p in sorted_points(cands):
        if not any(p.nu):
            trace.append(Elimination(p, "Adjoint", False, "tempered point"))
            keep.add(p)
            continue
        if disc is None:
            why = (
                "spin representation of the fixed dual group does not come from the ambient dual group"
                if t.family == "A"
                else "no representation available"
            )
            trace.append(Elimination(p, "none", False, why))
            keep.add(p)
            continue
        rep, why = disc
        ok = is_half_integral(d, p.nu, rep)
        trace.append(Elimination(p, rep.kind, not ok, why if not ok else "half-integral"))
        if ok:
            keep.add(p)
    return QuasiSplitReduction(t, tau_order, folded, cands, frozenset(keep), tuple(trace))
