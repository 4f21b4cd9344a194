"""Based root data for the simple types, in explicit exact coordinates.

Conventions.  A :class:`RootDatum` describes a split adjoint group ``G``.
Its coroots are the roots of the dual Lie algebra, and every vector
(coroots, weights, Satake parameters ``nu``, neutral elements) lives in one
ambient rational space where the pairing is the ordinary dot product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]

HALF = Fraction(1, 2)

FAMILIES = "ABCDEFG"
ISOGENIES = ("adjoint", "simply-connected", "intermediate")


class DomainError(ValueError):
    """Raised when an input is outside the mathematical domain of an operation."""


def vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def lincomb(coeffs: Iterable, vectors: Sequence[Vector]) -> Vector:
    out = zero(len(vectors[0]))
    for c, v in zip(coeffs, vectors):
        if c:
            out = add(out, scale(c, v))
    return out


def pairing(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    """Exact pairing of a coweight-side and a weight-side vector (dot product)."""
    if len(x) != len(y):
        raise DomainError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return Fraction(sum(a * b for a, b in zip(x, y)))


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector:
    """Solve a square nonsingular rational system by Gauss-Jordan elimination."""
    n = len(matrix)
    m = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise DomainError("singular system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [a / p for a in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def inverse(matrix: Sequence[Sequence[Fraction]]) -> Tuple[Vector, ...]:
    n = len(matrix)
    cols = [solve(matrix, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def coordinates_in(basis: Sequence[Vector], x: Sequence[Fraction]) -> Vector:
    """Coefficients of ``x`` in a linearly independent ``basis`` (x must lie in its span)."""
    gram = [[pairing(b, c) for c in basis] for b in basis]
    coeffs = solve(gram, [pairing(b, x) for b in basis])
    if lincomb(coeffs, basis) != tuple(Fraction(a) for a in x):
        raise DomainError("vector is not in the span of the basis")
    return coeffs


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int
    isogeny: str = "adjoint"

    def __post_init__(self) -> None:
        f, r = self.family, self.rank
        if f not in FAMILIES or not isinstance(r, int):
            raise DomainError(f"unknown simple type {f}{r}")
        ok = {
            "A": r >= 1,
            "B": r >= 1,
            "C": r >= 1,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            raise DomainError(f"invalid simple type {f}{r}")
        if self.isogeny not in ISOGENIES:
            raise DomainError(f"unknown isogeny tag {self.isogeny!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "SimpleType":
        s = text.strip().replace("_", "").replace(" ", "").upper()
        if not s or s[0] not in FAMILIES:
            raise DomainError(f"cannot parse simple type {text!r}")
        if len(s) > 1:
            try:
                r = int(s[1:])
            except ValueError:
                raise DomainError(f"cannot parse simple type {text!r}") from None
            if rank is not None and rank != r:
                raise DomainError(f"conflicting ranks in {text!r} and {rank}")
        elif rank is not None:
            r = int(rank)
        else:
            defaults = {"E": None, "F": 4, "G": 2}
            r = defaults.get(s[0])
            if r is None:
                raise DomainError(f"simple type {text!r} needs a rank")
        return cls(s[0], r)

    @property
    def dual(self) -> "SimpleType":
        f = {"B": "C", "C": "B"}.get(self.family, self.family)
        return SimpleType(f, self.rank)

    @property
    def is_exceptional(self) -> bool:
        return self.family in "EFG"

    @property
    def lie_algebra_dimension(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 2),
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(n, 0),
            "F": 52,
            "G": 14,
        }[self.family]


def dual_type(t: SimpleType) -> SimpleType:
    return t.dual


@dataclass(frozen=True)
class RootDatum:
    simple_type: SimpleType
    simple_roots: Tuple[Vector, ...]
    simple_coroots: Tuple[Vector, ...]
    fundamental_weights: Tuple[Vector, ...]
    fundamental_coweights: Tuple[Vector, ...]
    positive_coroots: Tuple[Vector, ...]
    rho: Vector
    coxeter_number: int
    degrees: Tuple[int, ...]
    highest_coroot: Vector
    # integer coordinates of each positive coroot in the simple coroots
    coroot_coefficients: Tuple[Tuple[int, ...], ...] = field(repr=False, default=())
    _index: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.simple_coroots)

    @property
    def dim(self) -> int:
        return len(self.rho)

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra."""
        return 2 * len(self.positive_coroots) + self.rank

    def zero(self) -> Vector:
        return zero(self.dim)

    def level(self, a: Sequence[Fraction]) -> Fraction:
        return pairing(a, self.rho)

    def cartan_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """Entries ``<alpha_i^vee, alpha_j>``."""
        return tuple(
            tuple(int(pairing(ai, aj)) for aj in self.simple_roots) for ai in self.simple_coroots
        )

    def fundamental_coordinates(self, nu: Sequence[Fraction]) -> Vector:
        """The numbers ``<alpha_i^vee, nu>``; ``nu`` equals their combination of the weights."""
        return tuple(pairing(a, nu) for a in self.simple_coroots)

    def from_fundamental(self, coeffs: Sequence) -> Vector:
        return lincomb([Fraction(c) for c in coeffs], self.fundamental_weights)

    def reflect(self, i: int, x: Sequence[Fraction]) -> Vector:
        """Simple reflection ``s_i`` acting on the weight side."""
        c = pairing(self.simple_coroots[i], x)
        return sub(x, scale(c, self.simple_roots[i])) if c else tuple(x)

    def reflect_coweight(self, i: int, x: Sequence[Fraction]) -> Vector:
        """Simple reflection ``s_i`` acting on the coweight side."""
        c = pairing(x, self.simple_roots[i])
        return sub(x, scale(c, self.simple_coroots[i])) if c else tuple(x)

    def in_span(self, x: Sequence[Fraction]) -> bool:
        try:
            coordinates_in(self.simple_coroots, x)
        except DomainError:
            return False
        return True

    def is_positive_coroot(self, a: Sequence[Fraction]) -> bool:
        return tuple(Fraction(x) for x in a) in self._index

    def coroot_level(self, a: Sequence[Fraction]) -> int:
        return coroot_level(self, a)


@dataclass(frozen=True)
class ChamberPoint:
    datum: RootDatum
    nu: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", tuple(Fraction(x) for x in self.nu))
        if len(self.nu) != self.datum.dim:
            raise DomainError(
                f"expected {self.datum.dim} coordinates for {self.datum.simple_type}, got {len(self.nu)}"
            )
        if not self.datum.in_span(self.nu):
            raise DomainError("point is not in the span of the coroots")

    @classmethod
    def from_fundamental(cls, d: RootDatum, coeffs: Sequence) -> "ChamberPoint":
        return cls(d, d.from_fundamental(coeffs))

    @property
    def fundamental_coordinates(self) -> Vector:
        return self.datum.fundamental_coordinates(self.nu)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fundamental_coordinates)

    def __neg__(self) -> "ChamberPoint":
        return ChamberPoint(self.datum, scale(-1, self.nu))


# --- per-type coordinates -------------------------------------------------


def _e(n: int, *idx_val) -> Vector:
    v = [Fraction(0)] * n
    for i, x in idx_val:
        v[i - 1] += Fraction(x)
    return tuple(v)


def _type_a(n: int):
    # PGL(n), rank n-1, trace-zero coordinates in R^n
    cor = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
    om = [
        tuple(Fraction(1 if j < k else 0) - Fraction(k, n) for j in range(n)) for k in range(1, n)
    ]
    return cor, om


def _type_b(n: int):
    # SO(2n+1)
    cor = [_e(n, (1, 2))] + [_e(n, (i - 1, -1), (i, 1)) for i in range(2, n + 1)]
    om = [tuple([HALF] * n)] + [_e(n, *[(j, 1) for j in range(i, n + 1)]) for i in range(2, n + 1)]
    return cor, om


def _type_c(n: int):
    # PSp(2n)
    cor = [_e(n, (1, 1))] + [_e(n, (i - 1, -1), (i, 1)) for i in range(2, n + 1)]
    om = [_e(n, *[(j, 1) for j in range(i, n + 1)]) for i in range(1, n + 1)]
    return cor, om


def _type_d(n: int):
    # PSO(2n)
    cor = [_e(n, (1, 1), (2, 1)), _e(n, (1, -1), (2, 1))]
    cor += [_e(n, (i - 1, -1), (i, 1)) for i in range(3, n + 1)]
    om = [tuple([HALF] * n), tuple([-HALF] + [HALF] * (n - 1))]
    om += [_e(n, *[(j, 1) for j in range(i, n + 1)]) for i in range(3, n + 1)]
    return cor, om


def _type_g2():
    cor = [vec(Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)), vec(-1, 1, 0)]
    om = [vec(1, 1, -2), vec(0, 1, -1)]
    return cor, om


def _type_f4():
    cor = [vec(1, -1, -1, -1), vec(0, 0, 0, 2), vec(0, 0, 1, -1), vec(0, 1, -1, 0)]
    om = [vec(1, 0, 0, 0), vec(Fraction(3, 2), HALF, HALF, HALF), vec(2, 1, 1, 0), vec(1, 1, 0, 0)]
    return cor, om


def _e8_coroots():
    h = HALF
    cor = [vec(h, -h, -h, -h, -h, -h, -h, h), _e(8, (1, 1), (2, 1)), _e(8, (1, -1), (2, 1))]
    cor += [_e(8, (i - 2, -1), (i - 1, 1)) for i in range(4, 9)]
    return cor


def _type_e(r: int):
    cor = _e8_coroots()[:r]
    h = HALF
    if r == 8:
        om = [
            _e(8, (8, 2)),
            vec(h, h, h, h, h, h, h, Fraction(5, 2)),
            vec(-h, h, h, h, h, h, h, Fraction(7, 2)),
            vec(0, 0, 1, 1, 1, 1, 1, 5),
            vec(0, 0, 0, 1, 1, 1, 1, 4),
            vec(0, 0, 0, 0, 1, 1, 1, 3),
            vec(0, 0, 0, 0, 0, 1, 1, 2),
            _e(8, (7, 1), (8, 1)),
        ]
    elif r == 7:
        t = Fraction(3, 2)
        om = [
            vec(0, 0, 0, 0, 0, 0, -1, 1),
            vec(h, h, h, h, h, h, -1, 1),
            vec(-h, h, h, h, h, h, -t, t),
            vec(0, 0, 1, 1, 1, 1, -2, 2),
            vec(0, 0, 0, 1, 1, 1, -t, t),
            vec(0, 0, 0, 0, 1, 1, -1, 1),
            vec(0, 0, 0, 0, 0, 1, -h, h),
        ]
    else:
        a, b, c = Fraction(2, 3), Fraction(5, 6), Fraction(1, 3)
        om = [
            vec(0, 0, 0, 0, 0, -a, -a, a),
            vec(h, h, h, h, h, -h, -h, h),
            vec(-h, h, h, h, h, -b, -b, b),
            vec(0, 0, 1, 1, 1, -1, -1, 1),
            vec(0, 0, 0, 1, 1, -a, -a, a),
            vec(0, 0, 0, 0, 1, -c, -c, c),
        ]
    return cor, om


_COXETER = {"F": 12, "G": 6}
_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


def _degrees(t: SimpleType) -> Tuple[int, ...]:
    n = t.rank
    if t.family == "A":
        return tuple(range(2, n + 2))
    if t.family in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if t.family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return _DEGREES[(t.family, n)]


def _coxeter(t: SimpleType) -> int:
    return max(_degrees(t))


def _positive_coefficients(cartan: Sequence[Sequence[int]]) -> list:
    """Positive coroots as integer combinations of simple coroots, by reflection closure."""
    r = len(cartan)
    simple = [tuple(int(i == k) for k in range(r)) for i in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for j in range(r):
                c = sum(b[k] * cartan[k][j] for k in range(r))
                if c:
                    y = tuple(b[k] - (c if k == j else 0) for k in range(r))
                    if all(x >= 0 for x in y) and any(y) and y not in found:
                        found.add(y)
                        nxt.append(y)
        frontier = nxt
    return sorted(found)


@lru_cache(maxsize=None)
def build_root_datum(t: SimpleType) -> RootDatum:
    """Root datum of the split adjoint group of type ``t``."""
    f, n = t.family, t.rank
    if f == "A":
        cor, om = _type_a(n + 1)
    elif f == "B":
        cor, om = _type_b(n)
    elif f == "C":
        cor, om = _type_c(n)
    elif f == "D":
        cor, om = _type_d(n)
    elif f == "G":
        cor, om = _type_g2()
    elif f == "F":
        cor, om = _type_f4()
    else:
        cor, om = _type_e(n)
    roots = [scale(Fraction(2) / pairing(a, a), a) for a in cor]
    rho = lincomb([1] * len(om), om)
    cartan = [[int(pairing(ak, aj)) for aj in roots] for ak in cor]
    coeffs = sorted(_positive_coefficients(cartan), key=lambda b: (sum(b), tuple(-x for x in b)))
    pos = [lincomb(b, cor) for b in coeffs]
    coeffs = tuple(coeffs)
    highest = pos[-1]
    # fundamental coweights: dual basis to the simple roots inside the coroot span
    gram = [[pairing(ak, aj) for ak in cor] for aj in roots]
    cow = []
    for i in range(len(cor)):
        rhs = [Fraction(int(i == j)) for j in range(len(cor))]
        cow.append(lincomb(solve(gram, rhs), cor))
    return RootDatum(
        simple_type=t,
        simple_roots=tuple(roots),
        simple_coroots=tuple(cor),
        fundamental_weights=tuple(om),
        fundamental_coweights=tuple(cow),
        positive_coroots=tuple(pos),
        rho=rho,
        coxeter_number=_coxeter(t),
        degrees=_degrees(t),
        highest_coroot=highest,
        coroot_coefficients=coeffs,
        _index={a: k for k, a in enumerate(pos)},
    )


def coroot_level(d: RootDatum, a: Sequence[Fraction]) -> int:
    a = tuple(Fraction(x) for x in a)
    if a not in d._index:
        raise DomainError(f"{fmt_vector(a)} is not a positive coroot of {d.simple_type}")
    return int(pairing(a, d.rho))


def dominant_representative(p: ChamberPoint) -> ChamberPoint:
    """Dominant Weyl conjugate, reached by reflecting in negative simple walls."""
    d, x = p.datum, p.nu
    while True:
        for i, a in enumerate(d.simple_coroots):
            if pairing(a, x) < 0:
                x = d.reflect(i, x)
                break
        else:
            return ChamberPoint(d, x)


def is_hermitian(p: ChamberPoint) -> bool:
    """Whether the dominant point satisfies ``w0(nu) = -nu``."""
    if not p.is_dominant():
        raise DomainError("is_hermitian expects a dominant point")
    t, nu = p.datum.simple_type, p.nu
    f, n = t.family, t.rank
    if f in "BCFG" or (f == "E" and n in (7, 8)) or (f == "D" and n % 2 == 0):
        return True
    if f == "A":
        m = len(nu)
        return all(nu[i] == -nu[m - 1 - i] for i in range(m))
    if f == "D":
        return nu[0] == 0
    # E6
    c = p.fundamental_coordinates
    return c[0] == c[5] and c[2] == c[4]


def is_hermitian_by_orbit(p: ChamberPoint) -> bool:
    """Reference check: ``-nu`` is Weyl conjugate to ``nu``."""
    return dominant_representative(-p).nu == dominant_representative(p).nu


def fold(t: SimpleType, tau_order: int) -> SimpleType:
    """Split group attached to a diagram automorphism of order ``tau_order``."""
    f, r = t.family, t.rank
    if tau_order == 2:
        if f == "A" and r >= 3 and r % 2 == 1:
            return SimpleType("B", (r + 1) // 2)
        if f == "A" and r >= 2 and r % 2 == 0:
            return SimpleType("C", r // 2)
        if f == "D" and r >= 4:
            return SimpleType("C", r - 1)
        if f == "E" and r == 6:
            return SimpleType("F", 4)
    if tau_order == 3 and f == "D" and r == 4:
        return SimpleType("G", 2)
    raise DomainError(f"({t}, {tau_order}) is not a quasi-split folding")


# --- formatting -----------------------------------------------------------


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    try:
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"malformed rational {s!r}; use p/q") from None


def fmt_rational(x: Fraction) -> str:
    return str(Fraction(x))


def fmt_vector(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(fmt_rational(x) for x in v) + ")"


def fmt_fundamental(coeffs: Sequence[Fraction], symbol: str = "w") -> str:
    terms = [f"{fmt_rational(c)}*{symbol}{i + 1}" for i, c in enumerate(coeffs) if c]
    return " + ".join(terms) if terms else "0"


def datum_to_json(d: RootDatum) -> dict:
    vs = lambda xs: [[fmt_rational(x) for x in v] for v in xs]
    return {
        "schema": "satake.rootdatum/1",
        "type": str(d.simple_type),
        "simple_roots": vs(d.simple_roots),
        "simple_coroots": vs(d.simple_coroots),
        "fundamental_weights": vs(d.fundamental_weights),
        "fundamental_coweights": vs(d.fundamental_coweights),
        "positive_coroots": vs(d.positive_coroots),
        "levels": [int(d.level(a)) for a in d.positive_coroots],
        "rho": [fmt_rational(x) for x in d.rho],
        "highest_coroot": [fmt_rational(x) for x in d.highest_coroot],
        "coxeter_number": d.coxeter_number,
        "degrees": list(d.degrees),
        "cartan_matrix": [list(r) for r in d.cartan_matrix()],
    }
