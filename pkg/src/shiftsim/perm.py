"""Eventually periodic permutations of the positive integers.

An :class:`EPPerm` stores a period ``p``, a threshold ``T`` and the values
``g(1), ..., g(T)``; every later value follows from ``g(i) = g(i - p) + p``.
Values are always kept in canonical form (minimal eventual period, then
minimal threshold), so equality is plain field comparison.

The identity is the single exception to the threshold rule: it is stored as
``(p=1, T=0, table=())``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Callable, Iterable, Sequence

INT64_MAX = 2**63 - 1


class InvalidPermutation(ValueError):
    """Raised when ``(p, T, table)`` does not describe a bijection of N."""


class MalformedTable(InvalidPermutation):
    pass


class DuplicateEntries(InvalidPermutation):
    pass


class IncompleteResidues(InvalidPermutation):
    pass


class InjectivityFailure(InvalidPermutation):
    pass


class SurjectivityFailure(InvalidPermutation):
    pass


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _check_width(value: int) -> int:
    if value > INT64_MAX:
        raise OverflowError(f"value {value} exceeds the 64-bit range")
    return value


@dataclass(frozen=True)
class EPPerm:
    """Canonical eventually periodic permutation. Use the constructors below."""

    p: int
    T: int
    table: tuple[int, ...] = field(default=())

    def __call__(self, i: int) -> int:
        return apply(self, i)

    def __mul__(self, other: EPPerm) -> EPPerm:
        return compose(self, other)

    def __repr__(self) -> str:
        return format_perm(self)

    @property
    def is_identity(self) -> bool:
        return self.T == 0

    @cached_property
    def displacement(self) -> int:
        """max |g(i) - i|, attained within the first ``T + p`` points."""
        return max((abs(apply(self, i) - i) for i in range(1, self.T + self.p + 1)), default=0)

    @cached_property
    def inv(self) -> EPPerm:
        return inverse(self)

    def preimage(self, v: int) -> int:
        return apply(self.inv, v)

    def values(self, n: int) -> list[int]:
        """``[g(1), ..., g(n)]``."""
        return [apply(self, i) for i in range(1, n + 1)]


IDENTITY = EPPerm(1, 0, ())


def _raw_apply(p: int, T: int, table: Sequence[int], i: int) -> int:
    if i <= T:
        return table[i - 1]
    if T == 0:
        return i
    k = (i - T + p - 1) // p
    return table[i - k * p - 1] + k * p


def apply(g: EPPerm, i: int) -> int:
    if i < 1:
        raise ValueError(f"points are positive integers, got {i}")
    return _raw_apply(g.p, g.T, g.table, i)


def _build(f: Callable[[int], int], p: int, t0: int) -> EPPerm:
    """Canonical form of a bijection ``f`` with ``f(i + p) = f(i) + p`` for ``i > t0``.

    Only ``f(1), ..., f(t0 + 2p)`` are evaluated.
    """
    n = t0 + 2 * p
    vals = [0] + [f(i) for i in range(1, n + 1)]
    d = [vals[i] - i for i in range(n + 1)]
    pattern = d[t0 + 1 : t0 + p + 1]
    q = next(q for q in _divisors(p) if all(pattern[r] == pattern[(r + q) % p] for r in range(p)))
    bad = [i for i in range(q + 1, n + 1) if d[i] != d[i - q]]
    T = max(bad, default=0)
    T = max(T, q)
    if q == 1 and all(d[i] == 0 for i in range(1, T + 1)):
        return IDENTITY
    table = tuple(_check_width(v) for v in vals[1 : T + 1])
    return EPPerm(q, T, table)


def _validate(p: int, T: int, table: Sequence[int]) -> None:
    if p < 1:
        raise MalformedTable(f"period must be positive, got {p}")
    if T < 0 or len(table) != T:
        raise MalformedTable(f"table length {len(table)} does not match threshold {T}")
    if T == 0:
        if p != 1:
            raise MalformedTable("T = 0 is only allowed with p = 1 (the identity)")
        return
    if T < p:
        raise MalformedTable(f"threshold {T} is smaller than the period {p}")
    if any(not isinstance(v, int) or v < 1 for v in table):
        raise MalformedTable("table entries must be positive integers")
    for v in table:
        _check_width(v)
    entries = set(table)
    if len(entries) != T:
        raise DuplicateEntries(f"table has repeated values: {list(table)}")
    window = table[T - p :]
    if len({v % p for v in window}) != p:
        raise IncompleteResidues(f"window values {list(window)} do not cover all residues mod {p}")
    bound = max(table)
    covered = set(entries)
    for v in window:
        w = v + p
        while w <= bound + p:
            if w in entries:
                raise InjectivityFailure(f"tail value {w} collides with a table entry")
            covered.add(w)
            w += p
    missing = [m for m in range(1, bound + p + 1) if m not in covered]
    if missing:
        raise SurjectivityFailure(f"value {missing[0]} is never attained")


def mk_periodic(p: int, T: int, table: Sequence[int]) -> EPPerm:
    """Validate ``(p, T, table)`` and return its canonical form."""
    table = tuple(table)
    _validate(p, T, table)
    return _build(lambda i: _raw_apply(p, T, table, i), p, T)


def mk_finite(cycles: Iterable[Sequence[int]]) -> EPPerm:
    """Finitely supported permutation from disjoint cycles."""
    mapping: dict[int, int] = {}
    for cyc in cycles:
        cyc = list(cyc)
        for a in cyc:
            if not isinstance(a, int) or a < 1:
                raise InvalidPermutation(f"cycle entries must be positive integers, got {a!r}")
            if a in mapping:
                raise InvalidPermutation(f"cycles are not disjoint: {a} appears twice")
            mapping[a] = -1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            mapping[a] = b
    if not mapping:
        return IDENTITY
    top = max(mapping)
    return _build(lambda i: mapping.get(i, i), 1, top)


def from_function(f: Callable[[int], int], p: int, t0: int) -> EPPerm:
    """Public wrapper around the normalizer; ``f`` must already be a bijection."""
    return _build(f, p, t0)


def compose(g: EPPerm, h: EPPerm) -> EPPerm:
    """``g o h`` (apply ``h`` first)."""
    if h.is_identity:
        return g
    if g.is_identity:
        return h
    L = lcm(g.p, h.p)
    t0 = max(h.T, g.T + h.displacement)
    return _build(lambda i: apply(g, apply(h, i)), L, t0)


def inverse(g: EPPerm) -> EPPerm:
    if g.is_identity:
        return g
    bound = max(g.table)
    reach = bound + 2 * g.p + g.displacement + 1
    pre = {apply(g, i): i for i in range(1, reach + 1)}
    return _build(pre.__getitem__, g.p, bound)


def conj(x: EPPerm, y: EPPerm) -> EPPerm:
    """``x^y = y^-1 o x o y``."""
    return compose(inverse(y), compose(x, y))


def power(g: EPPerm, k: int) -> EPPerm:
    base = g if k >= 0 else inverse(g)
    out = IDENTITY
    for _ in range(abs(k)):
        out = compose(base, out)
    return out


@dataclass(frozen=True)
class Germ:
    """Coset ``rep . Sym_fin(N)``; the representative is not canonicalized."""

    rep: EPPerm

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Germ):
            return NotImplemented
        return germ_equals(self, other)

    def __hash__(self) -> int:
        # equal germs share the minimal period and the tail displacement per residue
        g = self.rep
        tail = {i % g.p: apply(g, i) - i for i in range(g.T + 1, g.T + g.p + 1)}
        return hash((g.p, tuple(sorted(tail.items()))))

    def __mul__(self, other: Germ) -> Germ:
        return Germ(compose(self.rep, other.rep))


def germ(g: EPPerm) -> Germ:
    return Germ(g)


def germ_equals(a: Germ, b: Germ) -> bool:
    g, h = a.rep, b.rep
    start = max(g.T, h.T)
    return all(apply(g, i) == apply(h, i) for i in range(start + 1, start + lcm(g.p, h.p) + 1))


# -- text and JSON ------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> EPPerm:
    """Parse whitespace-separated cycle notation such as ``"(1 3)(2 5 6 4)"``."""
    stripped = text.strip()
    if not stripped or stripped in ("()", "id"):
        return IDENTITY
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"not in cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        parts = body.split()
        if not all(part.isdigit() for part in parts):
            raise ValueError(f"cycle entries must be positive integers: ({body})")
        if parts:
            cycles.append([int(part) for part in parts])
    return mk_finite(cycles)


def cycle_preview(g: EPPerm, window: int = 24) -> str:
    """Cycle notation restricted to ``[1..window]``.

    Closed cycles are printed as ``(a b c)``; orbits that leave the window are
    printed as open chains ``(... a b c ...)``. Fixed points are omitted.
    """
    seen: set[int] = set()
    parts = []
    for start in range(1, window + 1):
        if start in seen or apply(g, start) == start:
            continue
        chain = [start]
        x = apply(g, start)
        while x <= window and x != start:
            chain.append(x)
            x = apply(g, x)
        if x == start:
            seen.update(chain)
            parts.append("(" + " ".join(map(str, chain)) + ")")
            continue
        back = []
        y = g.preimage(start)
        while y <= window:
            back.append(y)
            y = g.preimage(y)
        chain = back[::-1] + chain
        seen.update(chain)
        parts.append("(... " + " ".join(map(str, chain)) + " ...)")
    return "".join(parts) if parts else "()"


def format_perm(g: EPPerm) -> str:
    table = ",".join(map(str, g.table))
    return f"p={g.p},T={g.T},table=[{table}]"


def to_dict(g: EPPerm) -> dict:
    return {"p": g.p, "T": g.T, "table": list(g.table)}


def from_dict(data: dict) -> EPPerm:
    """Deserialize; rejects non-canonical input as well as non-bijections."""
    try:
        p, T, table = data["p"], data["T"], data["table"]
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"expected an object with keys p, T, table: {data!r}") from exc
    g = mk_periodic(p, T, table)
    if (g.p, g.T, list(g.table)) != (p, T, list(table)):
        raise MalformedTable(f"permutation is not in canonical form; canonical is {format_perm(g)}")
    return g


def dumps(g: EPPerm) -> str:
    return json.dumps(to_dict(g))


def loads(text: str) -> EPPerm:
    return from_dict(json.loads(text))


# odd numbers climb by 2, even numbers descend by 2, and 2 drops to 1
ALPHA = mk_periodic(2, 4, [3, 1, 5, 2])
# swaps 2k-1 and 2k
LAMBDA = mk_periodic(2, 2, [2, 1])
