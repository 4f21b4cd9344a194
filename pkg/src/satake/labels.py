"""Parsing, normalizing and formatting Dynkin-type labels (Bala-Carter and centralizer strings)."""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, List, Tuple

from .rootdata import DomainError

# one component: (family, rank, short, suffix)
Component = Tuple[str, int, bool, str]

_TOKEN = re.compile(
    r"(?P<mult>\d*)(?P<tilde>~?)(?P<fam>[A-GT])(?P<tilde2>~?)(?P<rank>\d)"
    r"(?P<suffix>\([ab]\d\))?"
)
_FAMILY_ORDER = {"E": 0, "F": 1, "G": 2, "D": 3, "C": 4, "B": 5, "A": 6, "T": 7}


def _clean(label: str) -> str:
    s = label.strip()
    for tilde in ("\\widetilde", "\\wti", "\\tilde"):
        s = re.sub(re.escape(tilde) + r"\s*\{?\s*([A-G])\s*\}?", r"~\1", s)
    s = s.replace("Ã", "~A").replace("Ã", "~A")
    s = s.replace("′", "'").replace("″", "''")
    return re.sub(r"\$|\\|\{|\}|\s|_", "", s)


def split_primes(label: str) -> Tuple[str, str]:
    """Separate the trailing prime marks of a label such as ``(3A1)''``."""
    s = _clean(label)
    m = re.fullmatch(r"(.*?)('*)", s)
    body, primes = m.group(1), m.group(2)
    if body.startswith("(") and body.endswith(")") and not re.fullmatch(r".*\([ab]\d\)", body):
        body = body[1:-1]
    return body, primes


def parse_label(label: str) -> List[Component]:
    """Split a label such as ``A4+2A1`` or ``E_6A_1`` into components (multiplicities expanded)."""
    s, _ = split_primes(label)
    if s in ("1", "0", ""):
        return []
    out: List[Component] = []
    pos = 0
    while pos < len(s):
        if s[pos] == "+":
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m:
            raise DomainError(f"cannot parse label {label!r}")
        mult = int(m.group("mult") or 1)
        comp = (
            m.group("fam"),
            int(m.group("rank")),
            bool(m.group("tilde") or m.group("tilde2")),
            (m.group("suffix") or "")[1:-1],
        )
        out.extend([comp] * mult)
        pos = m.end()
    return out


def label_key(label: str) -> Tuple:
    """Order-insensitive identity of a label."""
    return tuple(sorted(Counter(parse_label(label)).items())), split_primes(label)[1]


def same_label(a: str, b: str) -> bool:
    try:
        return label_key(a) == label_key(b)
    except DomainError:
        return False


def component_str(c: Component) -> str:
    fam, rank, short, suffix = c
    head = ("\u00c3" if short and fam == "A" else ("~" + fam if short else fam)) + str(rank)
    return head + (f"({suffix})" if suffix else "")


def format_label(components: Iterable[Component], primes: str = "") -> str:
    """Canonical form: exceptional before classical, larger rank first, repeats grouped."""
    comps = sorted(components, key=lambda c: (_FAMILY_ORDER[c[0]], -c[1], c[2], c[3]))
    if not comps:
        return "1"
    parts = []
    for c, k in _grouped(comps):
        parts.append((str(k) if k > 1 else "") + component_str(c))
    body = "+".join(parts)
    if primes and (len(parts) > 1 or body[0].isdigit()):
        body = f"({body})"
    return body + primes


def _grouped(comps):
    out = []
    for c in comps:
        if out and out[-1][0] == c:
            out[-1][1] += 1
        else:
            out.append([c, 1])
    return [(c, k) for c, k in out]


def identify_component(cartan: List[List[int]], lengths: List, longest=None) -> Tuple[str, int, bool]:
    """Type of a connected Dynkin diagram from its Cartan matrix and squared root lengths.

    Returns ``(family, rank, short)``.  ``short`` flags a simply-laced component
    made of short roots; it is only computed when ``longest`` (the longest
    squared length of an ambient doubly-laced system) is given.
    """
    r = len(cartan)
    adj = [[j for j in range(r) if j != i and cartan[i][j] != 0] for i in range(r)]
    deg = [len(x) for x in adj]
    if len(set(lengths)) == 1:
        short = longest is not None and lengths[0] < longest
        if max(deg, default=0) <= 2:
            return "A", r, short
        centre = deg.index(3)
        arms = sorted(_arm_length(adj, centre, nb) for nb in adj[centre])
        if arms[:2] == [1, 1]:
            return "D", r, False
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return "E", r, False
        raise DomainError("unrecognised simply-laced diagram")
    if r == 2:
        return ("G", 2, False) if max(lengths) / min(lengths) == 3 else ("B", 2, False)
    top = max(lengths)
    n_long = sum(1 for x in lengths if x == top)
    if n_long == r - 1:
        return "B", r, False
    if n_long == 1:
        return "C", r, False
    if r == 4 and n_long == 2:
        return "F", 4, False
    raise DomainError("unrecognised doubly-laced diagram")


def _arm_length(adj, centre, start) -> int:
    n, prev, cur = 1, centre, start
    while True:
        nxt = [j for j in adj[cur] if j != prev]
        if not nxt:
            return n
        prev, cur = cur, nxt[0]
        n += 1


def diagram_components(cartan: List[List[int]]) -> List[List[int]]:
    r = len(cartan)
    seen, comps = set(), []
    for s in range(r):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps
