"""Exact homology over Q and the Taylor-complex Betti number oracle.

Nothing here depends on admissible orders or decomposition functions, so it
can be used to check the constructions in :mod:`htres.resolution` and
:mod:`htres.cells`.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd

from .betti import BettiTable
from .errors import BoundaryNotComplex, TooLarge
from .monomials import Monomial, MonomialIdeal
from .resolution import FreeComplex, TaylorBasis

TAYLOR_BOUND = 14


def rank_q(rows) -> int:
    """Rank over Q of a sparse integer matrix given as row dicts {col: int}.

    Fraction-free elimination; rows are divided by their content to keep
    entries small.
    """
    pivots = {}
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                rank += 1
                break
            a, b = r[c], p[c]
            new = {k: b * v for k, v in r.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - a * v
            r = {k: v for k, v in new.items() if v}
            if r:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
    return rank


@dataclass
class ChainComplex:
    """Integer chain complex: ``ranks[k]`` and ``maps[k]`` = {(row, col): int} for d_k: C_k -> C_{k-1}."""

    ranks: dict
    maps: dict = field(default_factory=dict)

    def degrees(self):
        return sorted(self.ranks)

    def _rows(self, k):
        rows = defaultdict(dict)
        for (r, c), v in self.maps.get(k, {}).items():
            if v:
                rows[r][c] = v
        return rows

    def check(self):
        """Raise :class:`BoundaryNotComplex` unless d_{k-1} d_k = 0 for all k."""
        for k in self.maps:
            if k - 1 not in self.maps:
                continue
            lower = self._rows(k - 1)
            for r, row in self._rows(k).items():
                acc = defaultdict(int)
                for c, v in row.items():
                    for t, w in lower.get(c, {}).items():
                        acc[t] += v * w
                bad = [t for t, v in acc.items() if v]
                if bad:
                    raise BoundaryNotComplex(f"d_{k - 1} d_{k} != 0 at row {r}, column {min(bad)}")

    def homology_ranks(self):
        """{k: dim H_k over Q}."""
        self.check()
        rk = {k: rank_q(self._rows(k).values()) for k in self.maps}
        return {k: self.ranks[k] - rk.get(k, 0) - rk.get(k + 1, 0) for k in self.degrees()}

    def euler_characteristic(self):
        return sum((-1) ** k * r for k, r in self.ranks.items())


def reduced_homology_ranks(K) -> list:
    """Reduced homology ranks over Q in degrees 0..dim of a simplicial or cell complex.

    ``K`` must provide ``chain_complex(augmented=True)``.  The empty complex
    yields ``[]``.
    """
    cc = K.chain_complex(augmented=True)
    if not any(r for k, r in cc.ranks.items() if k >= 0):
        return []
    h = cc.homology_ranks()
    return [h[k] for k in sorted(h) if k >= 0]


def is_acyclic(K) -> bool:
    """True iff K is empty or all reduced homology vanishes."""
    return not any(reduced_homology_ranks(K))


def taylor_labels(gens):
    """lcm label of every subset of ``gens``, indexed by bitmask."""
    m = len(gens)
    n = gens[0].n if gens else 0
    labels = [Monomial.one(n)] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        labels[mask] = labels[mask & (mask - 1)].lcm(gens[low])
    return labels


def _subset(mask):
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def taylor_complex(gens, bound=TAYLOR_BOUND) -> FreeComplex:
    """Taylor complex on the list ``gens`` (not minimalized) as a free complex."""
    gens = list(gens)
    m = len(gens)
    if m > bound:
        raise TooLarge(f"Taylor complex on {m} generators exceeds bound {bound}")
    n = gens[0].n
    labels = taylor_labels(gens)
    masks = sorted(range(1 << m), key=lambda s: (bin(s).count("1"), _subset(s)))
    bases = [[] for _ in range(m + 1)]
    where = {}
    for s in masks:
        k = bin(s).count("1")
        where[s] = len(bases[k])
        bases[k].append(TaylorBasis(_subset(s), labels[s]))
    maps = {}
    for k in range(1, m + 1):
        entries = {}
        for r, b in enumerate(bases[k]):
            s = sum(1 << i for i in b.subset)
            for pos, i in enumerate(b.subset):
                t = s & ~(1 << i)
                entries[(r, where[t])] = ((-1) ** pos, labels[s] / labels[t])
        maps[k] = entries
    return FreeComplex(n, tuple(tuple(b) for b in bases), maps)


def taylor_betti(ideal: MonomialIdeal, bound=TAYLOR_BOUND, order=None) -> BettiTable:
    """beta_{i,b}(S/I) from the multidegree strands of the Taylor complex.

    For each lcm b the strand consists of the subsets with label exactly b;
    after tensoring with the residue field only faces with the same label
    survive, and the homology of that strand in degree i is beta_{i,b}.
    ``order`` optionally permutes G(I); the result must not depend on it.
    """
    gens = list(ideal.gens if order is None else order)
    if sorted(gens, key=Monomial.sort_key) != list(ideal.gens):
        raise ValueError("order must be a permutation of the minimal generators")
    m = len(gens)
    if m > bound:
        raise TooLarge(f"Taylor oracle on {m} generators exceeds bound {bound}")
    labels = taylor_labels(gens)
    strands = defaultdict(list)
    for s in range(1 << m):
        strands[labels[s]].append(s)
    table = BettiTable(ideal.n)
    for b, cells in strands.items():
        by_deg = defaultdict(list)
        for s in cells:
            by_deg[bin(s).count("1")].append(s)
        pos = {s: i for k in by_deg for i, s in enumerate(by_deg[k])}
        cc = ChainComplex({k: len(v) for k, v in by_deg.items()})
        for k, level in by_deg.items():
            if k == 0:
                continue
            entries = {}
            for s in level:
                for p, i in enumerate(_subset(s)):
                    t = s & ~(1 << i)
                    if labels[t] == b:
                        entries[(pos[s], pos[t])] = (-1) ** p
            cc.maps[k] = entries
            cc.ranks.setdefault(k - 1, 0)
        for k, h in cc.homology_ranks().items():
            if h:
                table.add(k, b, h)
    return table


def support_multidegrees(X, ideal: MonomialIdeal):
    """The lcm-closure of G(I) together with every cell label of X."""
    out = set(ideal.lcm_closure())
    out.update(c.label for c in X.cells)
    return sorted(out, key=Monomial.sort_key)


def supports_resolution(X, ideal: MonomialIdeal):
    """Labelled-complex criterion: every X_{<=b} is acyclic (empty counts).

    Returns ``(True, None)`` or ``(False, b)`` for the first failing b.
    """
    for b in support_multidegrees(X, ideal):
        if not is_acyclic(X.restrict(b)):
            return False, b
    return True, None
