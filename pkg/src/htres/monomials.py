"""Exact monomial arithmetic and monomial ideals.

Variables are the integers ``1..n`` ordered ``x1 < x2 < ... < xn``.  A
:class:`Monomial` is an exponent vector of length ``n``; sets of variables are
``frozenset`` of indices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ContextMismatch, ParseError

MAX_VARS = 32
MAX_DEGREE = 10**6


@dataclass(frozen=True)
class Monomial:
    exps: tuple

    def __post_init__(self):
        exps = tuple(self.exps)
        if len(exps) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables supported, got {len(exps)}")
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e!r}")
        if sum(exps) > MAX_DEGREE:
            raise OverflowError(f"degree {sum(exps)} exceeds {MAX_DEGREE}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def var(cls, i, n):
        """The variable x_i in n variables (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    @classmethod
    def from_vars(cls, variables: Iterable[int], n):
        e = [0] * n
        for i in variables:
            e[i - 1] += 1
        return cls(tuple(e))

    @property
    def n(self):
        return len(self.exps)

    @property
    def degree(self):
        return sum(self.exps)

    @property
    def support(self):
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def max_var(self):
        """Largest variable index dividing the monomial (0 for the unit)."""
        for i in range(len(self.exps), 0, -1):
            if self.exps[i - 1]:
                return i
        return 0

    def is_one(self):
        return not any(self.exps)

    def is_squarefree(self):
        return all(e <= 1 for e in self.exps)

    def _check(self, other):
        if not isinstance(other, Monomial):
            raise TypeError(f"expected Monomial, got {type(other).__name__}")
        if len(other.exps) != len(self.exps):
            raise ContextMismatch(f"{len(self.exps)} vs {len(other.exps)} variables")

    def __mul__(self, other):
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other):
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        self._check(other)
        q = tuple(a - b for a, b in zip(self.exps, other.exps))
        if any(e < 0 for e in q):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(q)

    def divides(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other):
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def times_vars(self, variables: Iterable[int]):
        e = list(self.exps)
        for i in variables:
            e[i - 1] += 1
        return Monomial(tuple(e))

    def sort_key(self):
        """Degree, then reverse-lexicographic (x1^2 < x1x2 < x2^2 < x1x3 ...)."""
        return (self.degree, self.exps[::-1], self.exps)

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self})"


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def minimalize(ms: Iterable[Monomial]) -> frozenset:
    """Divisibility-minimal elements of ``ms``."""
    ms = sorted(set(ms), key=Monomial.sort_key)
    if not ms:
        raise ValueError("minimalize needs at least one monomial")
    n = ms[0].n
    kept = []
    for m in ms:
        if m.n != n:
            raise ContextMismatch(f"{n} vs {m.n} variables")
        # sorted by degree, so only earlier elements can divide m
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set G(I).

    ``gens`` is kept in canonical order (see :meth:`Monomial.sort_key`); an
    empty tuple is the zero ideal.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        gens = tuple(self.gens)
        for g in gens:
            if g.n != self.n:
                raise ContextMismatch(f"generator {g} has {g.n} variables, ideal has {self.n}")
        if gens:
            gens = tuple(sorted(minimalize(gens), key=Monomial.sort_key))
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_exponents(cls, n, rows):
        return cls(n, tuple(Monomial(tuple(r)) for r in rows))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def is_zero(self):
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def index(self, g: Monomial) -> int:
        return self.gens.index(g)

    def lcm_closure(self):
        """All lcms of non-empty subsets of G(I)."""
        out = set()
        for g in self.gens:
            out |= {g.lcm(c) for c in out}
            out.add(g)
        return sorted(out, key=Monomial.sort_key)

    def to_json(self):
        return {"n": self.n, "gens": [list(g.exps) for g in self.gens]}

    @classmethod
    def from_json(cls, doc):
        n = int(doc["n"])
        rows = doc["gens"]
        for r in rows:
            if len(r) != n:
                raise ContextMismatch(f"exponent vector {r} has length {len(r)}, expected {n}")
        return cls.from_exponents(n, rows)

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def restrict_below(ideal: MonomialIdeal, mu: Monomial) -> MonomialIdeal:
    """The ideal I_{<=mu} generated by the generators dividing ``mu``."""
    return MonomialIdeal(ideal.n, tuple(g for g in ideal.gens if g.divides(mu)))


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_monomial(text: str, n: int, offset: int = 0) -> Monomial:
    """Parse ``x1^2*x3`` style text.  ``offset`` shifts reported positions."""
    exps = [0] * n
    pos = 0
    stripped = re.sub(r"\s+", "", text)
    # map positions in the stripped string back to the original
    back = [i for i, ch in enumerate(text) if not ch.isspace()]
    if not stripped:
        raise ParseError("empty monomial", offset)
    if stripped == "1":
        return Monomial.one(n)
    while True:
        m = _FACTOR.match(stripped, pos)
        if not m:
            raise ParseError(f"expected x<i>[^<e>], got {stripped[pos:pos + 8]!r}",
                             offset + back[min(pos, len(back) - 1)])
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} out of range 1..{n}", offset + back[pos])
        e = int(m.group(2)) if m.group(2) is not None else 1
        exps[i - 1] += e
        pos = m.end()
        if pos == len(stripped):
            break
        if stripped[pos] != "*":
            raise ParseError(f"expected '*', got {stripped[pos]!r}", offset + back[pos])
        pos += 1
        if pos == len(stripped):
            raise ParseError("dangling '*'", offset + back[pos - 1])
    return Monomial(tuple(exps))


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse a comma/newline separated list of monomials into a minimal ideal."""
    if n < 1:
        raise ParseError(f"need at least one variable, got n={n}")
    gens = []
    start = 0
    for piece in re.split(r"([,\n])", text):
        if piece in (",", "\n"):
            start += 1
            continue
        if piece.strip():
            gens.append(parse_monomial(piece, n, offset=start))
        start += len(piece)
    if not gens:
        raise ParseError("empty generator list")
    return MonomialIdeal(n, tuple(gens))


def infer_nvars(text: str) -> int:
    idx = [int(i) for i in re.findall(r"x(\d+)", text)]
    return max(idx) if idx else 1
