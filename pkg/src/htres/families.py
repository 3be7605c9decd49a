"""Generators for stable, squarefree stable and matroidal ideals."""
from __future__ import annotations

from itertools import combinations

from .errors import TooLarge
from .monomials import Monomial, MonomialIdeal

MAX_GENS = 64


def _check_cap(gens, cap):
    if cap is not None and len(gens) > cap:
        raise TooLarge(f"{len(gens)} generators exceed cap {cap}")


def gen_stable(seeds, squarefree=False, cap=MAX_GENS) -> MonomialIdeal:
    """Smallest stable (or squarefree stable) ideal containing ``seeds``.

    Closes under m -> x_i m / x_max(m) for i < max(m).  The squarefree
    exchange is m -> x_i m / x_j for any x_j dividing m and i < j with x_i not
    dividing m.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("gen_stable needs at least one seed")
    n = seeds[0].n
    if squarefree and not all(s.is_squarefree() for s in seeds):
        raise ValueError("squarefree stable closure needs squarefree seeds")
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        m = stack.pop()
        if squarefree:
            moves = [(i, j) for j in sorted(m.support) for i in range(1, j) if not m.exps[i - 1]]
        else:
            moves = [(i, m.max_var) for i in range(1, m.max_var)]
        for i, j in moves:
            w = m.times_vars((i,)) / Monomial.var(j, n)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    ideal = MonomialIdeal(n, tuple(seen))
    _check_cap(ideal.gens, cap)
    return ideal


def gen_uniform(k, n, cap=MAX_GENS) -> MonomialIdeal:
    """Squarefree Veronese ideal: one generator per k-subset of n variables."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    gens = [Monomial.from_vars(s, n) for s in combinations(range(1, n + 1), k)]
    _check_cap(gens, cap)
    return MonomialIdeal(n, tuple(gens))


def spanning_trees(edges):
    """Edge-index subsets (0-based) forming spanning trees of the multigraph."""
    verts = sorted({v for e in edges for v in e})
    if len(verts) < 2:
        raise ValueError("graph needs at least two vertices")
    k = len(verts) - 1
    trees = []
    for sub in combinations(range(len(edges)), k):
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        ok = True
        for i in sub:
            a, b = (find(v) for v in edges[i])
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            trees.append(sub)
    if not trees:
        raise ValueError("graph is disconnected")
    return trees


def gen_graphic(edges, cap=MAX_GENS) -> MonomialIdeal:
    """Ideal of spanning trees; edge number e (1-based) is the variable x_e."""
    edges = [tuple(e) for e in edges]
    if any(len(e) != 2 for e in edges):
        raise ValueError("edges must be vertex pairs")
    n = len(edges)
    gens = [Monomial.from_vars([i + 1 for i in t], n) for t in spanning_trees(edges)]
    _check_cap(gens, cap)
    return MonomialIdeal(n, tuple(gens))


def gen_matroidal(kind, *args, cap=MAX_GENS) -> MonomialIdeal:
    """``gen_matroidal("uniform", k, n)`` or ``gen_matroidal("graphic", edges)``."""
    if kind == "uniform":
        return gen_uniform(*args, cap=cap)
    if kind == "graphic":
        return gen_graphic(*args, cap=cap)
    raise ValueError(f"unknown matroid kind {kind!r}")


def parse_edges(text):
    """``"1-2,1-3,2-3"`` -> [(1, 2), (1, 3), (2, 3)]."""
    out = []
    for piece in text.replace(" ", "").split(","):
        if not piece:
            continue
        a, sep, b = piece.partition("-")
        if not sep or not a.isdigit() or not b.isdigit():
            raise ValueError(f"bad edge {piece!r}, expected a-b")
        out.append((int(a), int(b)))
    return out
