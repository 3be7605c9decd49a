"""Admissible orders, colon variable sets and decomposition functions."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import NotDegreeIncreasing, NotInIdeal, NotLinear, NotRegular
from .monomials import Monomial, MonomialIdeal, minimalize


def colon_variable_set(prefix: Sequence[Monomial], u: Monomial) -> frozenset:
    """Variables generating ``<prefix> : u``.

    Raises :class:`NotLinear` carrying a minimal generator of degree >= 2.
    """
    if not prefix:
        raise ValueError("colon_variable_set needs a non-empty prefix")
    quotients = minimalize(p.lcm(u) / u for p in prefix)
    bad = [q for q in quotients if q.degree != 1]
    if bad:
        raise NotLinear(min(bad, key=Monomial.sort_key))
    return frozenset(i for q in quotients for i in q.support)


@dataclass(frozen=True)
class AdmissibleOrder:
    """An admissible order u_1..u_m of G(I) together with q(u_j).

    The decomposition function g is determined by the order: g(v) is the
    earliest generator dividing v.
    """

    ideal: MonomialIdeal
    order: tuple
    qsets: tuple

    def __post_init__(self):
        object.__setattr__(self, "_pos", {u: j for j, u in enumerate(self.order)})

    def __len__(self):
        return len(self.order)

    @property
    def n(self):
        return self.ideal.n

    def position(self, u: Monomial) -> int:
        """0-based position of ``u`` in the order."""
        return self._pos[u]

    def q(self, u: Monomial) -> frozenset:
        return self.qsets[self._pos[u]]

    def decompose(self, v: Monomial) -> Monomial:
        for u in self.order:
            if u.divides(v):
                return u
        raise NotInIdeal(f"{v} is not in {self.ideal}")

    def g_multi(self, sigma, u: Monomial) -> Monomial:
        """g(sigma; u) = g(u * prod(sigma))."""
        if not sigma:
            return u
        return self.decompose(u.times_vars(sigma))

    def restricted(self, mu: Monomial) -> "AdmissibleOrder":
        """Induced order on the generators dividing ``mu`` (re-validated)."""
        sub = [u for u in self.order if u.divides(mu)]
        return is_admissible(MonomialIdeal(self.n, tuple(sub)), sub)

    def to_json(self):
        gens = self.ideal.gens
        return {
            "n": self.n,
            "gens": [list(g.exps) for g in gens],
            "order": [gens.index(u) + 1 for u in self.order],
            "q": [sorted(qs) for qs in self.qsets],
        }

    @classmethod
    def from_json(cls, doc):
        ideal = MonomialIdeal.from_json(doc)
        order = [ideal.gens[i - 1] for i in doc["order"]]
        a = is_admissible(ideal, order)
        if [sorted(qs) for qs in a.qsets] != [sorted(qs) for qs in doc["q"]]:
            raise ValueError("stored q sets disagree with the recomputed colon ideals")
        return a


def decompose(a: AdmissibleOrder, v: Monomial) -> Monomial:
    return a.decompose(v)


def g_multi(a: AdmissibleOrder, sigma, u: Monomial) -> Monomial:
    return a.g_multi(sigma, u)


def is_admissible(ideal: MonomialIdeal, order: Sequence[Monomial]) -> AdmissibleOrder:
    """Validate ``order`` step by step and fill in the q sets.

    Raises :class:`NotDegreeIncreasing` or :class:`NotLinear` with the 1-based
    step at which the order fails.
    """
    order = tuple(order)
    if sorted(order, key=Monomial.sort_key) != list(ideal.gens):
        raise ValueError("order is not a permutation of the minimal generators")
    qsets = []
    for j, u in enumerate(order):
        if j and u.degree < order[j - 1].degree:
            raise NotDegreeIncreasing(j + 1)
        if j == 0:
            qsets.append(frozenset())
            continue
        try:
            qsets.append(colon_variable_set(order[:j], u))
        except NotLinear as exc:
            raise NotLinear(exc.witness, step=j + 1) from None
    return AdmissibleOrder(ideal, order, tuple(qsets))


def regularity_witness(a: AdmissibleOrder):
    """First ``(j, y, z)`` with z in q(g(y u_j)) but not in q(u_j), or None."""
    for j, u in enumerate(a.order):
        qu = a.qsets[j]
        for y in sorted(qu):
            extra = a.q(a.g_multi((y,), u)) - qu
            if extra:
                return (j + 1, y, min(extra))
    return None


def is_regular(a: AdmissibleOrder):
    """Return ``(True, None)`` or ``(False, (j, y, z))``."""
    w = regularity_witness(a)
    return w is None, w


def require_regular(a: AdmissibleOrder) -> AdmissibleOrder:
    w = regularity_witness(a)
    if w is not None:
        raise NotRegular(w)
    return a


def find_admissible_order(ideal: MonomialIdeal, require_regular: bool = False,
                          seed=None):
    """Backtracking search for a degree-increasing (regular) admissible order.

    Candidates at each step are the unused generators of least degree, tried
    in canonical (degree, reverse-lex) order, or shuffled by ``seed``.
    Returns None when no such order exists.
    """
    gens = list(ideal.gens)
    if not gens:
        return AdmissibleOrder(ideal, (), ())
    rng = random.Random(seed) if seed is not None else None

    order: list = []
    qsets: list = []
    used: set = set()
    dead = set()  # unused-generator sets known to be unextendable (non-regular mode only)

    def g(v):
        for w in order:
            if w.divides(v):
                return w
        raise NotInIdeal(str(v))

    def step():
        if len(order) == len(gens):
            return True
        key = frozenset(used)
        if not require_regular and key in dead:
            return False
        rest = [u for u in gens if u not in used]
        low = min(u.degree for u in rest)
        cands = [u for u in rest if u.degree == low]
        if rng is not None:
            rng.shuffle(cands)
        for u in cands:
            if order:
                try:
                    qu = colon_variable_set(order, u)
                except NotLinear:
                    continue
            else:
                qu = frozenset()
            if require_regular and order:
                pos = {w: k for k, w in enumerate(order)}
                if any(not qsets[pos[g(u.times_vars((y,)))]] <= qu for y in qu):
                    continue
            order.append(u)
            qsets.append(qu)
            used.add(u)
            if step():
                return True
            order.pop()
            qsets.pop()
            used.discard(u)
        if not require_regular:
            dead.add(key)
        return False

    if not step():
        return None
    return AdmissibleOrder(ideal, tuple(order), tuple(qsets))


def satisfies_shelling_condition(order: Sequence[Monomial]) -> bool:
    """Brute-force check of the shelling type condition on an ordering.

    For all j and i < j there must be k < j with lcm(u_k, u_j) = x_t u_j for
    some variable x_t and lcm(u_k, u_j) dividing lcm(u_i, u_j).
    """
    order = list(order)
    for j, uj in enumerate(order):
        for i in range(j):
            lij = order[i].lcm(uj)
            ok = False
            for k in range(j):
                lkj = order[k].lcm(uj)
                if lkj.degree == uj.degree + 1 and lkj.divides(lij):
                    ok = True
                    break
            if not ok:
                return False
    return True


def commutation_violations(a: AdmissibleOrder):
    """Triples (u, y, z) where g(y g(z u)) != g(z g(y u))."""
    bad = []
    for u, qu in zip(a.order, a.qsets):
        for y, z in combinations(sorted(qu), 2):
            lhs = a.decompose(a.g_multi((z,), u).times_vars((y,)))
            rhs = a.decompose(a.g_multi((y,), u).times_vars((z,)))
            if lhs != rhs:
                bad.append((u, y, z))
    return bad
