from itertools import permutations

import pytest

from htres.cells import Cell, CellComplex, SimplicialComplex, build_X, build_lambda
from htres.errors import BoundaryNotComplex, TooLarge
from htres.families import gen_uniform
from htres.homology import (ChainComplex, is_acyclic, rank_q, reduced_homology_ranks,
                            supports_resolution, taylor_betti)
from htres.monomials import Monomial, MonomialIdeal, parse_ideal
from htres.quotients import find_admissible_order

from conftest import mono


def simplex(*facets):
    verts = sorted({v for F in facets for v in F})
    return SimplicialComplex.from_faces([Monomial.var(v, 9) for v in verts],
                                        [{Monomial.var(v, 9) for v in F} for F in facets])


def test_rank_q():
    assert rank_q([{0: 2, 1: 4}, {0: 1, 1: 2}]) == 1
    assert rank_q([{0: 1}, {1: 1}, {0: 3, 1: -5}]) == 2
    assert rank_q([]) == 0
    assert rank_q([{0: 6, 2: 10}, {1: 15, 2: 3}, {0: 3, 1: 15, 2: 8}]) == 2


def test_point_triangle_and_disjoint_points():
    assert reduced_homology_ranks(simplex({1})) == [0]
    assert reduced_homology_ranks(simplex({1, 2}, {2, 3}, {1, 3})) == [0, 1]
    assert reduced_homology_ranks(simplex({1, 2, 3})) == [0, 0, 0]
    assert not is_acyclic(simplex({1}, {2}))
    assert reduced_homology_ranks(simplex({1}, {2})) == [1]


def test_empty_complex_is_acyclic():
    assert is_acyclic(SimplicialComplex((), frozenset()))
    assert is_acyclic(CellComplex(2, (), ()))


def test_path_is_acyclic():
    assert is_acyclic(simplex({1, 2}, {2, 3}))


def test_lambda_of_square_of_maximal_ideal(sq3):
    L = build_lambda(find_admissible_order(sq3, require_regular=True))
    assert reduced_homology_ranks(L) == [0, 0, 0]


def test_boundary_not_complex():
    cc = ChainComplex({0: 1, 1: 1, 2: 1}, {1: {(0, 0): 1}, 2: {(0, 0): 1}})
    with pytest.raises(BoundaryNotComplex):
        cc.homology_ranks()


def test_euler_characteristic_matches_homology():
    K = simplex({1, 2}, {2, 3}, {1, 3}, {3, 4, 5})
    cc = K.chain_complex(augmented=False)
    h = cc.homology_ranks()
    assert cc.euler_characteristic() == sum((-1) ** k * v for k, v in h.items())


def test_taylor_two_variables():
    t = taylor_betti(parse_ideal("x1, x2", 2))
    assert t.totals() == (1, 2, 1)
    assert t[(2, mono("x1*x2", 2))] == 1
    assert t[(0, Monomial.one(2))] == 1


def test_taylor_m3(m3):
    t = taylor_betti(m3)
    assert t.totals() == (1, 3, 2)
    assert t[(2, mono("x1*x2*x3", 3))] == 2


def test_taylor_square_of_maximal_ideal(sq3):
    assert taylor_betti(sq3).totals() == (1, 6, 8, 3)


def test_taylor_is_permutation_invariant():
    I = gen_uniform(2, 4)
    ref = taylor_betti(I)
    for p in list(permutations(I.gens))[::97]:
        assert taylor_betti(I, order=p) == ref


def test_taylor_bound():
    with pytest.raises(TooLarge):
        taylor_betti(gen_uniform(2, 6), bound=14)


def test_supports_resolution(m3, sq3):
    for I in (m3, sq3):
        X = build_X(find_admissible_order(I, require_regular=True))
        assert supports_resolution(X, I) == (True, None)


def test_two_disjoint_vertices_do_not_support():
    n = 3
    a, b = mono("x1*x2", n), mono("x2*x3", n)
    cells = (Cell(frozenset(), a, 0, a, frozenset({a})), Cell(frozenset(), b, 0, b, frozenset({b})))
    X = CellComplex(n, cells, ((), ()), (a, b))
    ok, witness = supports_resolution(X, MonomialIdeal(n, (a, b)))
    assert not ok and witness == mono("x1*x2*x3", n)
