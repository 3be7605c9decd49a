"""The labelled regular cell complex X_I and its simplicial subdivision Lambda_I.

Cells are indexed by pairs (sigma, u) with sigma a subset of q(u).  The face
poset and incidence signs are stored combinatorially; nothing is embedded.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BoundaryNotComplex, TooLarge
from .homology import ChainComplex, reduced_homology_ranks
from .monomials import Monomial
from .quotients import AdmissibleOrder, require_regular
from .resolution import BasisElement, FreeComplex

SHELLING_BOUND = 12


@dataclass(frozen=True)
class Cell:
    sigma: frozenset
    u: Monomial
    dim: int
    label: Monomial
    vertex_set: frozenset

    @property
    def key(self):
        return (self.sigma, self.u)

    def __str__(self):
        s = ",".join(f"x{y}" for y in sorted(self.sigma))
        return f"B({{{s}}};{self.u})"


@dataclass(frozen=True)
class CellComplex:
    """Cells plus, per cell, a tuple of ``(face_id, sign)`` for its codim-1 faces.

    ``gens`` fixes the numbering of vertex labels used in JSON output.
    """

    n: int
    cells: tuple
    faces: tuple
    gens: tuple = ()

    def __len__(self):
        return len(self.cells)

    def ids_by_dim(self):
        out = defaultdict(list)
        for k, c in enumerate(self.cells):
            out[c.dim].append(k)
        return dict(out)

    def dim(self):
        return max((c.dim for c in self.cells), default=-1)

    def f_vector(self):
        by = self.ids_by_dim()
        return tuple(len(by.get(d, ())) for d in range(self.dim() + 1))

    def euler_characteristic(self):
        return sum((-1) ** c.dim for c in self.cells)

    def chain_complex(self, augmented=True) -> ChainComplex:
        by = self.ids_by_dim()
        pos = {k: i for ids in by.values() for i, k in enumerate(ids)}
        cc = ChainComplex({d: len(ids) for d, ids in by.items()})
        for d, ids in by.items():
            if d == 0:
                continue
            cc.ranks.setdefault(d - 1, 0)
            cc.maps[d] = {(pos[k], pos[f]): s for k in ids for f, s in self.faces[k]}
        if augmented and self.cells:
            cc.ranks[-1] = 1
            cc.ranks.setdefault(0, 0)
            cc.maps[0] = {(pos[k], 0): 1 for k in by.get(0, ())}
        return cc

    def closure_ids(self, k):
        """``k`` and all cells below it in the face poset."""
        seen = {k}
        stack = [k]
        while stack:
            for f, _ in self.faces[stack.pop()]:
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
        return seen

    def subcomplex(self, ids) -> "CellComplex":
        ids = sorted(ids)
        new = {k: i for i, k in enumerate(ids)}
        faces = []
        for k in ids:
            if any(f not in new for f, _ in self.faces[k]):
                raise ValueError(f"cell {k} has a face outside the subcomplex")
            faces.append(tuple((new[f], s) for f, s in self.faces[k]))
        return CellComplex(self.n, tuple(self.cells[k] for k in ids), tuple(faces), self.gens)

    def restrict(self, mu: Monomial) -> "CellComplex":
        """X_{<=mu}: cells whose label divides ``mu``."""
        return self.subcomplex(k for k, c in enumerate(self.cells) if c.label.divides(mu))

    def maximal_ids(self):
        below = {f for fs in self.faces for f, _ in fs}
        return [k for k in range(len(self.cells)) if k not in below]

    def incidences(self):
        """(cell id, face id) pairs sorted like the entries of the matching free complex."""
        return sorted((k, f) for k in range(len(self.cells)) for f, _ in self.faces[k])

    def flip_sign(self, idx) -> "CellComplex":
        inc = self.incidences()
        if not 0 <= idx < len(inc):
            raise IndexError(f"incidence {idx} out of range (complex has {len(inc)})")
        k, f = inc[idx]
        faces = list(self.faces)
        faces[k] = tuple((g, -s if g == f else s) for g, s in faces[k])
        return CellComplex(self.n, self.cells, tuple(faces), self.gens)

    def canonical(self):
        """Index-free description used to compare labelled complexes."""
        return frozenset(
            (c.sigma, c.u, c.label, frozenset((self.cells[f].key, s) for f, s in self.faces[k]))
            for k, c in enumerate(self.cells))

    def to_json(self):
        gens = list(self.gens) or sorted({c.u for c in self.cells}, key=Monomial.sort_key)
        gidx = {g: i + 1 for i, g in enumerate(gens)}
        return {
            "n": self.n,
            "gens": [list(g.exps) for g in gens],
            "cells": [{"id": k, "dim": c.dim, "u": gidx[c.u], "sigma": sorted(c.sigma),
                       "label": list(c.label.exps),
                       "vertices": sorted(gidx[v] for v in c.vertex_set),
                       "faces": [{"id": f, "sign": s} for f, s in self.faces[k]]}
                      for k, c in enumerate(self.cells)],
        }

    @classmethod
    def from_json(cls, doc):
        n = int(doc["n"])
        gens = tuple(Monomial(tuple(e)) for e in doc["gens"])
        cells, faces = [], []
        for k, d in enumerate(doc["cells"]):
            if d["id"] != k:
                raise ValueError("cell ids must be 0..N-1 in order")
            u = gens[d["u"] - 1]
            verts = frozenset(gens[i - 1] for i in d.get("vertices", [d["u"]]))
            cells.append(Cell(frozenset(d["sigma"]), u, int(d["dim"]),
                              Monomial(tuple(d["label"])), verts))
            faces.append(tuple((f["id"], int(f["sign"])) for f in d["faces"]))
        return cls(n, tuple(cells), tuple(faces), gens)

    def dump(self):
        """Flat text listing of the face poset."""
        lines = []
        for k, c in enumerate(self.cells):
            fs = " ".join(f"{'+' if s > 0 else '-'}{f}" for f, s in self.faces[k])
            lines.append(f"{k:>4} dim={c.dim} {c} label={c.label} faces: {fs}")
        return "\n".join(lines)


def _sign(sigma, y):
    return -1 if sum(1 for z in sigma if z < y) % 2 else 1


def build_X(a: AdmissibleOrder) -> CellComplex:
    """Cells B(sigma, u) for sigma in q(u) with signs taken from delta - mu."""
    require_regular(a)
    top = max((len(q) for q in a.qsets), default=-1)
    keys = [(frozenset(s), u) for d in range(top + 1)
            for u, qu in zip(a.order, a.qsets) for s in combinations(sorted(qu), d)]
    index = {k: i for i, k in enumerate(keys)}
    cells, faces = [], []
    for sigma, u in keys:
        verts = frozenset(a.g_multi(t, u) for d in range(len(sigma) + 1)
                          for t in combinations(sorted(sigma), d))
        cells.append(Cell(sigma, u, len(sigma), u.times_vars(sigma), verts))
        fs = []
        for y in sorted(sigma):
            s = _sign(sigma, y)
            rest = sigma - {y}
            fs.append((index[(rest, u)], -s))
            v = a.decompose(u.times_vars((y,)))
            if rest <= a.q(v):
                fs.append((index[(rest, v)], s))
        faces.append(tuple(fs))
    return CellComplex(a.n, tuple(cells), tuple(faces), a.ideal.gens)


def restrict_cells(X: CellComplex, mu: Monomial) -> CellComplex:
    return X.restrict(mu)


def cellular_free_complex(X: CellComplex) -> FreeComplex:
    """Cellular free complex of a labelled complex, augmented by the unit.

    Entry for a cell c and face c' is sign * label(c)/label(c').
    """
    by = X.ids_by_dim()
    top = X.dim()
    bases = [(BasisElement(frozenset(), None, Monomial.one(X.n)),)]
    pos = {}
    for d in range(top + 1):
        ids = by.get(d, [])
        for i, k in enumerate(ids):
            pos[k] = i
        bases.append(tuple(BasisElement(X.cells[k].sigma, X.cells[k].u, X.cells[k].label)
                           for k in ids))
    maps = {}
    if top >= 0:
        maps[1] = {(pos[k], 0): (1, X.cells[k].label) for k in by.get(0, [])}
    for d in range(1, top + 1):
        maps[d + 1] = {(pos[k], pos[f]): (s, X.cells[k].label / X.cells[f].label)
                       for k in by.get(d, []) for f, s in X.faces[k]}
    return FreeComplex(X.n, tuple(bases), maps)


def keyed_entries(F: FreeComplex):
    """{(i, source key, target key): (coef, mono)} independent of basis positions."""
    return {(i, F.bases[i][r].key, F.bases[i - 1][c].key): e for i, r, c, e in F.entries()}


def chain_complexes_equal(X: CellComplex, F: FreeComplex):
    """Compare the cellular complex of X with F entry by entry under (sigma, u)."""
    G = cellular_free_complex(X)
    if sorted(map(len, G.bases)) != sorted(map(len, F.bases)) or \
            {b.key for lv in G.bases for b in lv} != {b.key for lv in F.bases for b in lv}:
        return False, "bases differ"
    lhs, rhs = keyed_entries(G), keyed_entries(F)
    for k in sorted(set(lhs) | set(rhs), key=repr):
        if lhs.get(k) != rhs.get(k):
            return False, (k, lhs.get(k), rhs.get(k))
    return True, None


def check_regular_cw(X: CellComplex):
    """Combinatorial regular-CW checks on a labelled cell complex.

    (a) the augmented boundary squares to zero, (b) every interval of length
    two in the face poset is a diamond with opposite sign products, (c) every
    cell boundary has the reduced homology of a sphere of one dimension less,
    (d) stored vertex sets match the vertices in each cell's closure.
    Returns ``(True, None)`` or ``(False, (check, detail))``.
    """
    try:
        X.chain_complex(augmented=True).check()
    except BoundaryNotComplex as exc:
        return False, ("boundary-squared", str(exc))
    for k, c in enumerate(X.cells):
        fs = X.faces[k]
        if any(X.cells[f].dim != c.dim - 1 for f, _ in fs):
            return False, ("face-dimension", k)
        if c.dim == 1 and len(fs) != 2:
            return False, ("diamond", (k, None, len(fs)))
        paths = defaultdict(list)
        for f, s in fs:
            for g, t in X.faces[f]:
                paths[g].append(s * t)
        for g in sorted(paths):
            if len(paths[g]) != 2 or sum(paths[g]) != 0:
                return False, ("diamond", (k, g, paths[g]))
    for k, c in enumerate(X.cells):
        if c.dim == 0:
            continue
        bd = X.subcomplex(X.closure_ids(k) - {k})
        expect = [0] * (c.dim - 1) + [1]
        got = reduced_homology_ranks(bd)
        if got + [0] * (len(expect) - len(got)) != expect:
            return False, ("sphere", (k, got))
    for k, c in enumerate(X.cells):
        verts = {X.cells[f].u for f in X.closure_ids(k) if X.cells[f].dim == 0}
        if verts != set(c.vertex_set):
            return False, ("vertex-set", k)
    return True, None


def distinct_vertex_sets(X: CellComplex):
    seen = {}
    for k, c in enumerate(X.cells):
        if c.vertex_set in seen:
            return False, (seen[c.vertex_set], k)
        seen[c.vertex_set] = k
    return True, None


# closure operators ---------------------------------------------------------

def _subsets(ground):
    ground = sorted(ground)
    for d in range(len(ground) + 1):
        for s in combinations(ground, d):
            yield frozenset(s)


def closure(a: AdmissibleOrder, u: Monomial, sigma, ground=None) -> frozenset:
    """Largest tau in ``ground`` (default q(u)) with g(tau; u) = g(sigma; u)."""
    ground = a.q(u) if ground is None else frozenset(ground)
    sigma = frozenset(sigma)
    if not sigma <= ground:
        raise ValueError("sigma must be a subset of the ground set")
    target = a.g_multi(sigma, u)
    out = frozenset()
    for t in _subsets(ground):
        if a.g_multi(t, u) == target:
            out |= t
    return out


@dataclass
class ClosureReport:
    ground: frozenset
    closure: dict
    closed_sets: list
    covers: list
    violation: tuple | None = None
    facts: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.violation is None


def convex_geometry_report(a: AdmissibleOrder, u: Monomial, ground=None,
                           bound=SHELLING_BOUND) -> ClosureReport:
    """Enumerate the closure operator on ``ground`` (default q(u)) and check it.

    Checks CO1-CO3, anti-exchange, that closed sets form a lattice under
    inclusion (intersection-closed, top = ground), and meet-distributivity.
    The first violated property is recorded as ``(name, witness)``.
    """
    ground = a.q(u) if ground is None else frozenset(ground)
    if len(ground) > bound:
        raise TooLarge(f"|ground| = {len(ground)} exceeds {bound}")
    subsets = list(_subsets(ground))
    value = {s: a.g_multi(s, u) for s in subsets}
    union = defaultdict(frozenset)
    for s in subsets:
        union[value[s]] |= s
    c = {s: union[value[s]] for s in subsets}
    closed = sorted({t for t in c.values()}, key=lambda t: (len(t), sorted(t)))
    covers = []
    for x in closed:
        for y in closed:
            if x < y and not any(x < z < y for z in closed):
                covers.append((x, y))
    report = ClosureReport(ground, c, closed, covers)

    def fail(name, witness):
        report.violation = (name, witness)
        return report

    for s in subsets:
        if value[c[s]] != value[s]:
            return fail("union-rule", s)
    for s in subsets:
        if not s <= c[s]:
            return fail("CO1", s)
    for s in subsets:
        for y in ground - s:
            if not c[s] <= c[s | {y}]:
                return fail("CO2", (s, y))
    for s in subsets:
        if c[c[s]] != c[s]:
            return fail("CO3", s)
    for s in subsets:
        outside = sorted(ground - c[s])
        for x in outside:
            for y in outside:
                if x != y and x in c[s | {y}] and y in c[s | {x}]:
                    return fail("AE", (s, x, y))
    closed_set = set(closed)
    if ground not in closed_set:
        return fail("lattice-top", ground)
    for x in closed:
        for y in closed:
            if x & y not in closed_set:
                return fail("lattice-meet", (x, y))
    lower = defaultdict(list)
    for x, y in covers:
        lower[y].append(x)
    for x in closed:
        if not lower[x]:
            continue
        m = frozenset.intersection(*lower[x])
        interval = [z for z in closed if m <= z <= x]
        atoms = [z for z in interval if z != m and not any(m < w < z for w in interval)]
        joins = {}
        for d in range(len(atoms) + 1):
            for S in combinations(atoms, d):
                joins[frozenset(S)] = c[frozenset().union(m, *S)]
        if len(set(joins.values())) != len(joins) or set(joins.values()) != set(interval):
            return fail("meet-distributive", x)
        for S, js in joins.items():
            for T, jt in joins.items():
                if (js <= jt) != (S <= T):
                    return fail("meet-distributive", x)
    report.facts = {"n_closed": len(closed), "boolean": len(closed) == 2 ** len(ground)}
    return report


# simplicial complexes ------------------------------------------------------

def _maximal(sets):
    sets = sorted(set(sets), key=len, reverse=True)
    out = []
    for s in sets:
        if not any(s <= t for t in out):
            out.append(s)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on monomial vertices, stored by its facets."""

    vertices: tuple
    facets: frozenset

    @classmethod
    def from_faces(cls, vertices, faces):
        faces = [frozenset(f) for f in faces if f]
        return cls(tuple(vertices), frozenset(_maximal(faces)))

    def faces(self):
        out = set()
        for F in self.facets:
            for d in range(1, len(F) + 1):
                out.update(frozenset(s) for s in combinations(F, d))
        return out

    def dim(self):
        return max((len(F) for F in self.facets), default=0) - 1

    def is_pure(self):
        return len({len(F) for F in self.facets}) <= 1

    def f_vector(self):
        counts = defaultdict(int)
        for f in self.faces():
            counts[len(f) - 1] += 1
        return tuple(counts[d] for d in range(self.dim() + 1))

    def euler_characteristic(self):
        return sum((-1) ** d * k for d, k in enumerate(self.f_vector()))

    def induced(self, W) -> "SimplicialComplex":
        W = frozenset(W)
        return SimplicialComplex.from_faces([v for v in self.vertices if v in W],
                                            [F & W for F in self.facets])

    def chain_complex(self, augmented=True) -> ChainComplex:
        order = {v: i for i, v in enumerate(self.vertices)}
        by = defaultdict(list)
        for f in self.faces():
            by[len(f) - 1].append(tuple(sorted(f, key=order.__getitem__)))
        for d in by:
            by[d].sort(key=lambda t: [order[v] for v in t])
        pos = {t: i for d in by for i, t in enumerate(by[d])}
        cc = ChainComplex({d: len(v) for d, v in by.items()})
        for d, level in by.items():
            if d == 0:
                continue
            cc.maps[d] = {(pos[t], pos[t[:p] + t[p + 1:]]): (-1) ** p
                          for t in level for p in range(len(t))}
        if augmented and by:
            cc.ranks[-1] = 1
            cc.maps[0] = {(pos[t], 0): 1 for t in by[0]}
        return cc

    def to_json(self):
        idx = {v: i for i, v in enumerate(self.vertices)}
        facets = sorted(sorted(idx[v] for v in F) for F in self.facets)
        return {"vertices": [list(v.exps) for v in self.vertices], "facets": facets}

    @classmethod
    def from_json(cls, doc):
        verts = tuple(Monomial(tuple(e)) for e in doc["vertices"])
        return cls.from_faces(verts, [frozenset(verts[i] for i in F) for F in doc["facets"]])


def order_complex_facets(elements, leq):
    """Maximal chains of a finite poset given by ``leq``."""
    elements = list(elements)
    up = {x: [y for y in elements if x != y and leq(x, y)
              and not any(z not in (x, y) and leq(x, z) and leq(z, y) for z in elements)]
          for x in elements}
    minimal = [x for x in elements if not any(y != x and leq(y, x) for y in elements)]
    chains = []

    def walk(chain):
        nxt = up[chain[-1]]
        if not nxt:
            chains.append(tuple(chain))
        for y in nxt:
            walk(chain + [y])

    for x in minimal:
        walk([x])
    return chains


def order_complex_lambda(a: AdmissibleOrder, u: Monomial, ground=None) -> SimplicialComplex:
    """Order complex of the non-empty closed sets, vertices labelled by g(.; u)."""
    rep = convex_geometry_report(a, u, ground)
    proper = [t for t in rep.closed_sets if t]
    chains = order_complex_facets(proper, lambda x, y: x <= y)
    verts = sorted({a.g_multi(t, u) for t in proper}, key=a.position)
    return SimplicialComplex.from_faces(verts, [{a.g_multi(t, u) for t in ch} for ch in chains])


def _lambda_steps(a: AdmissibleOrder, method: str):
    """Yield (u, Lambda(u), Lambda_j) along the order."""
    if method not in ("induced", "order"):
        raise ValueError(f"unknown method {method!r}")
    current = SimplicialComplex((), frozenset())
    for j, u in enumerate(a.order):
        if j == 0:
            lu = SimplicialComplex((), frozenset())
            current = SimplicialComplex((u,), frozenset([frozenset([u])]))
        else:
            if method == "induced":
                W = {a.g_multi(s, u) for s in _subsets(a.q(u)) if s}
                lu = current.induced(W)
            else:
                lu = order_complex_lambda(a, u)
            cone = [F | {u} for F in lu.facets]
            current = SimplicialComplex.from_faces(current.vertices + (u,),
                                                   list(current.facets) + cone)
        yield u, lu, current


def build_lambda(a: AdmissibleOrder, method: str = "order") -> SimplicialComplex:
    """Lambda_I: iterated cones over Lambda(u_j) inside Lambda_{j-1}."""
    require_regular(a)
    out = SimplicialComplex((), frozenset())
    for _, _, out in _lambda_steps(a, method):
        pass
    return out


def lambda_u(a: AdmissibleOrder, u: Monomial, method: str = "induced") -> SimplicialComplex:
    """Lambda(u) as the subcomplex of Lambda_{j-1} induced on g(sigma; u), sigma non-empty."""
    require_regular(a)
    for v, lu, _ in _lambda_steps(a, method):
        if v == u:
            return lu
    raise ValueError(f"{u} is not a generator")


def find_shelling(K: SimplicialComplex, bound: int = SHELLING_BOUND):
    """Backtracking search for a shelling order of a pure complex, or None."""
    if not K.is_pure():
        raise ValueError("find_shelling needs a pure complex")
    facets = sorted(K.facets, key=lambda F: sorted(K.vertices.index(v) for v in F))
    if len(facets) > bound:
        raise TooLarge(f"{len(facets)} facets exceed shelling bound {bound}")
    if not facets:
        return []

    def fits(F, prev):
        meets = [F & G for G in prev]
        ridges = [M for M in meets if len(M) == len(F) - 1]
        return bool(ridges) and all(any(M <= R for R in ridges) for M in meets)

    chosen = []
    left = set(range(len(facets)))

    def go():
        if not left:
            return True
        for i in sorted(left):
            if chosen and not fits(facets[i], [facets[k] for k in chosen]):
                continue
            chosen.append(i)
            left.discard(i)
            if go():
                return True
            left.add(i)
            chosen.pop()
        return False

    return [facets[i] for i in chosen] if go() else None


def subdivision_consistent(X: CellComplex, L: SimplicialComplex):
    """Vertex sets agree, each facet of L lies in exactly one maximal cell, same homology."""
    if {c.u for c in X.cells if c.dim == 0} != set(L.vertices):
        return False, "vertices"
    maxcells = [X.cells[k].vertex_set for k in X.maximal_ids()]
    for F in sorted(L.facets, key=lambda F: sorted(map(Monomial.sort_key, F))):
        hits = sum(1 for V in maxcells if F <= V)
        if hits != 1:
            return False, ("facet", F, hits)
    if X.euler_characteristic() != L.euler_characteristic():
        return False, "euler"
    hx, hl = reduced_homology_ranks(X), reduced_homology_ranks(L)
    width = max(len(hx), len(hl))
    if hx + [0] * (width - len(hx)) != hl + [0] * (width - len(hl)):
        return False, ("homology", hx, hl)
    return True, None
