"""Free complexes over S = K[x1..xn] and the Herzog-Takayama resolution.

A differential is stored sparsely as ``{(row, col): (coef, mono)}`` where
``row`` indexes the source basis in homological degree i, ``col`` the target
basis in degree i-1, ``coef`` is a non-zero integer and ``mono`` a monomial.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations

from .betti import BettiTable
from .monomials import Monomial
from .quotients import AdmissibleOrder, require_regular


@dataclass(frozen=True)
class BasisElement:
    """f(sigma; u), or the unit 1 when ``u`` is None."""

    sigma: frozenset
    u: Monomial | None
    multidegree: Monomial

    @property
    def hdeg(self):
        return 0 if self.u is None else len(self.sigma) + 1

    @property
    def key(self):
        return (self.sigma, self.u)

    def __str__(self):
        if self.u is None:
            return "1"
        s = ",".join(f"x{y}" for y in sorted(self.sigma))
        return f"f({{{s}}};{self.u})"


@dataclass(frozen=True)
class TaylorBasis:
    """Taylor basis element e_S for a subset S of generator positions."""

    subset: tuple
    multidegree: Monomial

    @property
    def hdeg(self):
        return len(self.subset)

    @property
    def key(self):
        return self.subset


@dataclass(frozen=True)
class FreeComplex:
    n: int
    bases: tuple          # bases[i] = tuple of basis elements in homological degree i
    maps: dict            # maps[i] = {(row, col): (coef, mono)} for d_i, i >= 1

    @property
    def ranks(self):
        return tuple(len(b) for b in self.bases)

    def index(self):
        """{key: (i, position)} over all basis elements."""
        return {b.key: (i, r) for i, basis in enumerate(self.bases) for r, b in enumerate(basis)}

    def entries(self):
        """All differential entries ordered by (i, row, col)."""
        for i in sorted(self.maps):
            for (r, c) in sorted(self.maps[i]):
                yield i, r, c, self.maps[i][(r, c)]

    def flip_sign(self, k, min_degree=2):
        """Copy with the k-th entry (0-based, among d_i with i >= min_degree) negated."""
        targets = [(i, r, c) for i, r, c, _ in self.entries() if i >= min_degree]
        if not 0 <= k < len(targets):
            raise IndexError(f"entry {k} out of range (complex has {len(targets)})")
        i, r, c = targets[k]
        maps = {j: dict(m) for j, m in self.maps.items()}
        coef, mono = maps[i][(r, c)]
        maps[i][(r, c)] = (-coef, mono)
        return FreeComplex(self.n, self.bases, maps)

    def to_json(self):
        basis = []
        for level in self.bases:
            row = []
            for b in level:
                d = {"deg": list(b.multidegree.exps)}
                if isinstance(b, TaylorBasis):
                    d["subset"] = list(b.subset)
                elif b.u is not None:
                    d["u"] = list(b.u.exps)
                    d["sigma"] = sorted(b.sigma)
                row.append(d)
            basis.append(row)
        return {
            "n": self.n,
            "ranks": list(self.ranks),
            "basis": basis,
            "maps": [{"i": i, "entries": [{"row": r, "col": c, "sign": coef, "mono": list(m.exps)}
                                          for (r, c), (coef, m) in sorted(self.maps[i].items())]}
                     for i in sorted(self.maps)],
        }

    @classmethod
    def from_json(cls, doc):
        n = int(doc["n"])
        bases = []
        for level in doc["basis"]:
            row = []
            for d in level:
                deg = Monomial(tuple(d["deg"]))
                if "subset" in d:
                    row.append(TaylorBasis(tuple(d["subset"]), deg))
                elif "u" in d:
                    row.append(BasisElement(frozenset(d["sigma"]), Monomial(tuple(d["u"])), deg))
                else:
                    row.append(BasisElement(frozenset(), None, deg))
            bases.append(tuple(row))
        if [len(b) for b in bases] != list(doc["ranks"]):
            raise ValueError("ranks disagree with basis listing")
        maps = {}
        for m in doc["maps"]:
            maps[int(m["i"])] = {(e["row"], e["col"]): (int(e["sign"]), Monomial(tuple(e["mono"])))
                                 for e in m["entries"]}
        return cls(n, tuple(bases), maps)


def alpha(sigma, y) -> int:
    """Number of variables in ``sigma`` strictly smaller than ``y``."""
    if y not in sigma:
        raise ValueError(f"x{y} is not in sigma")
    return sum(1 for z in sigma if z < y)


def _add(entries, key, coef, mono):
    if key in entries:
        old, m = entries[key]
        if m != mono:
            raise ValueError(f"inhomogeneous terms at {key}: {m} vs {mono}")
        coef += old
    if coef:
        entries[key] = (coef, mono)
    else:
        entries.pop(key, None)


def ht_basis(a: AdmissibleOrder):
    """Basis of the HT resolution grouped by homological degree."""
    n = a.n
    top = max((len(q) for q in a.qsets), default=-1) + 1
    bases = [[BasisElement(frozenset(), None, Monomial.one(n))]]
    for i in range(1, top + 1):
        level = []
        for u, qu in zip(a.order, a.qsets):
            for sigma in combinations(sorted(qu), i - 1):
                level.append(BasisElement(frozenset(sigma), u, u.times_vars(sigma)))
        bases.append(level)
    return tuple(tuple(level) for level in bases)


def build_resolution(a: AdmissibleOrder, check_regular: bool = True) -> FreeComplex:
    """The Herzog-Takayama complex F_I with differential delta - mu.

    Refuses non-regular orders with :class:`NotRegular` unless
    ``check_regular`` is False (used to study what breaks without regularity).
    """
    if check_regular:
        require_regular(a)
    bases = ht_basis(a)
    index = {b.key: r for level in bases for r, b in enumerate(level)}
    maps = {}
    if len(bases) > 1:
        maps[1] = {(r, 0): (1, b.u) for r, b in enumerate(bases[1])}
    for i in range(2, len(bases)):
        entries = {}
        for r, f in enumerate(bases[i]):
            u, sigma = f.u, f.sigma
            for y in sorted(sigma):
                s = -1 if alpha(sigma, y) % 2 else 1
                rest = sigma - {y}
                # mu part enters with a minus sign
                _add(entries, (r, index[(rest, u)]), -s, Monomial.var(y, a.n))
                v = a.decompose(u.times_vars((y,)))
                if rest <= a.q(v):
                    _add(entries, (r, index[(rest, v)]), s, u.times_vars((y,)) / v)
        maps[i] = entries
    return FreeComplex(a.n, bases, maps)


def betti_table(F: FreeComplex) -> BettiTable:
    """Count basis elements per (homological degree, multidegree)."""
    t = BettiTable(F.n)
    for i, level in enumerate(F.bases):
        for b in level:
            t.add(i, b.multidegree)
    return t


def verify_complex(F: FreeComplex):
    """Check homogeneity of every entry and d_{i-1} d_i = 0.

    Returns ``(True, None)`` or ``(False, (i, row, col))``; for a failing
    composite the witness is (i, row of d_i, column of d_{i-2}).
    """
    for i, r, c, (coef, mono) in F.entries():
        src = F.bases[i][r].multidegree
        tgt = F.bases[i - 1][c].multidegree
        if tgt * mono != src:
            return False, (i, r, c)
    for i in sorted(F.maps):
        if i - 1 not in F.maps:
            continue
        lower = defaultdict(list)
        for (c, k), entry in F.maps[i - 1].items():
            lower[c].append((k, entry))
        rows = defaultdict(list)
        for (r, c), entry in F.maps[i].items():
            rows[r].append((c, entry))
        for r in sorted(rows):
            acc = defaultdict(Counter)
            for c, (coef, mono) in rows[r]:
                for k, (coef2, mono2) in lower[c]:
                    acc[k][mono * mono2] += coef * coef2
            for k in sorted(acc):
                if any(acc[k].values()):
                    return False, (i, r, k)
    return True, None


def verify_minimal(F: FreeComplex) -> bool:
    """True iff no differential entry has a unit coefficient."""
    return all(mono.degree >= 1 for _, _, _, (_, mono) in F.entries())
