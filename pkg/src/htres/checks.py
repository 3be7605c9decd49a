"""The full invariant suite run by ``htres verify``."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import cells, homology, resolution
from .errors import HTResError
from .monomials import Monomial
from .quotients import AdmissibleOrder, commutation_violations, is_regular


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: object = None


def plain(obj):
    """JSON-friendly rendering of witnesses."""
    if isinstance(obj, Monomial):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        items = [plain(x) for x in obj]
        return sorted(items, key=str)
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


def _lambda_u_check(a, u, bound):
    l = len(a.q(u))
    induced = cells.lambda_u(a, u, method="induced")
    ordered = cells.order_complex_lambda(a, u)
    if induced != ordered:
        return False, ("induced-vs-order-complex", u)
    if not induced.is_pure() or induced.dim() != l - 1:
        return False, ("dimension", u, induced.dim())
    if not homology.is_acyclic(induced):
        return False, ("homology", u)
    if cells.find_shelling(induced, bound) is None:
        return False, ("not-shellable", u)
    return True, None


def _x_sigma_check(a, u, bound):
    qu = sorted(a.q(u))
    for d in range(1, len(qu)):
        for sigma in combinations(qu, d):
            rep = cells.convex_geometry_report(a, u, ground=sigma)
            if not rep.ok:
                return False, (u, sigma, rep.violation)
            K = cells.order_complex_lambda(a, u, ground=sigma)
            if not K.is_pure() or K.dim() != d - 1 or not homology.is_acyclic(K):
                return False, (u, sigma, "not-a-ball")
            if cells.find_shelling(K, bound) is None:
                return False, (u, sigma, "not-shellable")
    return True, None


def _restriction_check(a, X):
    for mu in a.ideal.lcm_closure():
        sub = a.restricted(mu)
        ok, w = is_regular(sub)
        if not ok:
            return False, (mu, "restricted order not regular", w)
        R = X.restrict(mu)
        if R.canonical() != cells.build_X(sub).canonical():
            return False, (mu, "restriction differs from X of restricted ideal")
        if not homology.is_acyclic(R):
            return False, (mu, "not acyclic")
    return True, None


def run_checks(a: AdmissibleOrder, flip_sign=None, taylor_bound=homology.TAYLOR_BOUND,
               shelling_bound=cells.SHELLING_BOUND):
    """Build F_I, X_I and Lambda_I from a regular order and run every check.

    ``flip_sign`` negates one incidence (same index in X_I and F_I) so the
    suite can be shown to fail.
    """
    F = resolution.build_resolution(a)
    X = cells.build_X(a)
    if flip_sign is not None:
        F = F.flip_sign(flip_sign)
        X = X.flip_sign(flip_sign)
    ideal = a.ideal
    results = []

    def run(name, fn):
        try:
            out = fn()
        except HTResError as exc:
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            return
        ok, w = out if isinstance(out, tuple) else (bool(out), None)
        results.append(CheckResult(name, ok, plain(w)))

    def betti():
        if len(ideal) > taylor_bound:
            return True, f"skipped: {len(ideal)} generators exceed Taylor bound"
        ht = resolution.betti_table(F)
        tb = homology.taylor_betti(ideal, taylor_bound)
        return ht == tb, None if ht == tb else {"ht": ht.totals(), "taylor": tb.totals()}

    def convex():
        for u in a.order:
            rep = cells.convex_geometry_report(a, u, bound=shelling_bound)
            if not rep.ok:
                return False, (u, rep.violation)
        return True, None

    def balls():
        for u in a.order:
            if a.q(u):
                ok, w = _lambda_u_check(a, u, shelling_bound)
                if not ok:
                    return ok, w
        return True, None

    def x_sigma():
        for u in a.order:
            ok, w = _x_sigma_check(a, u, shelling_bound)
            if not ok:
                return ok, w
        return True, None

    def contractible():
        L = cells.build_lambda(a, method="order")
        if L != cells.build_lambda(a, method="induced"):
            return False, "Lambda constructions disagree"
        if not homology.is_acyclic(L):
            return False, ("Lambda homology", homology.reduced_homology_ranks(L))
        if X.euler_characteristic() != 1:
            return False, ("euler", X.euler_characteristic())
        return True, None

    def subdivision():
        return cells.subdivision_consistent(X, cells.build_lambda(a))

    def commutation():
        bad = commutation_violations(a)
        return not bad, bad[:1] or None

    run("differential-squares-to-zero", lambda: resolution.verify_complex(F))
    run("minimal", lambda: resolution.verify_minimal(F))
    run("betti-equals-taylor", betti)
    run("cellular-equals-algebraic", lambda: cells.chain_complexes_equal(X, F))
    run("regular-cw", lambda: cells.check_regular_cw(X))
    run("supports-resolution", lambda: homology.supports_resolution(X, ideal))
    run("distinct-vertex-sets", lambda: cells.distinct_vertex_sets(X))
    run("convex-geometry", convex)
    run("lambda-u-shellable-ball", balls)
    run("x-sigma-shellable-ball", x_sigma)
    run("contractible", contractible)
    run("subdivision", subdivision)
    run("restriction", lambda: _restriction_check(a, X))
    run("regular-commutation", commutation)
    return results
