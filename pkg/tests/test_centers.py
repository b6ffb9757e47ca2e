from math import comb

from arcring import matchings as m
from arcring.arc_rings import (BasisMonomial, RingElement, ring_basis,
                               multiply, BUILTIN_RULES)
from arcring.centers import (odd_center, ring_center, even_center,
                             center_structure_constants, diagonal_monomials)
from arcring.zlinalg import lattices_equal, solve_Z
from conftest import odd_center_cached

DEFAULT = BUILTIN_RULES["default"]


def test_graded_ranks_n2():
    assert odd_center_cached("default", 2).graded_rank == {0: 1, 1: 3, 2: 2}
    assert ring_center(2, DEFAULT).graded_rank == {0: 1, 1: 0, 2: 2}
    assert even_center(2).graded_rank == {0: 1, 1: 3, 2: 2}


def test_odd_center_total_ranks():
    for n in (1, 2, 3):
        assert odd_center_cached("default", n).total_rank() == comb(2 * n, n)


def test_degree_zero_generator_is_unit_sum():
    oz = odd_center_cached("default", 2)
    gen = next(g for g in oz.generators
               if all(not mono.colored for mono in g.terms))
    words = [a.word for a in m.enumerate_matchings(2)]
    assert gen.terms == {BasisMonomial(w, w, frozenset()): 1 for w in words}


def test_ring_center_generators_n2():
    z = ring_center(2, DEFAULT)
    expected = [
        RingElement(2, {BasisMonomial("(())", "(())", frozenset()): 1,
                        BasisMonomial("()()", "()()", frozenset()): 1}),
        RingElement(2, {BasisMonomial("(())", "(())", frozenset({1, 2})): 1}),
        RingElement(2, {BasisMonomial("()()", "()()", frozenset({1, 2})): 1}),
    ]
    assert z.generators == expected


def test_degree1_lattice_matches_presentation():
    # span{a1+b1, a2+b1, a2+b2} in the degree-1 slice
    oz = odd_center_cached("default", 2)
    monos = diagonal_monomials(2, 1)

    def vec(pairs):
        v = [0] * len(monos)
        for w, i in pairs:
            v[monos.index(BasisMonomial(w, w, frozenset({i})))] += 1
        return v

    expected = [vec([("(())", 1), ("()()", 1)]),
                vec([("(())", 2), ("()()", 1)]),
                vec([("(())", 2), ("()()", 2)])]
    M_exp = [[col[i] for col in expected] for i in range(len(monos))]
    M_oz, _ = oz.coordinate_matrix(1)
    assert lattices_equal(M_exp, M_oz)


def test_rule_independence_of_lattice():
    for n in (1, 2, 3):
        a = odd_center_cached("default", n)
        b = odd_center_cached("ord", n)
        for p in range(n + 1):
            Ma, _ = a.coordinate_matrix(p)
            Mb, _ = b.coordinate_matrix(p)
            assert lattices_equal(Ma, Mb)


def test_ring_center_inside_odd_center():
    for n in (1, 2, 3):
        oz = odd_center_cached("default", n)
        z = ring_center(n, DEFAULT)
        for g in z.generators:
            assert oz.contains(g)


def test_membership_supercommutation():
    # every odd-center generator supercommutes with every basis monomial
    for n in (1, 2):
        oz = odd_center_cached("default", n)
        basis = [bm for bm, _ in ring_basis(n)]
        for g in oz.generators:
            pg = {len(mono.colored) for mono in g.terms}
            assert len(pg) == 1
            p = pg.pop()
            for bm in basis:
                x = RingElement.monomial(bm)
                q = len(bm.colored)
                lhs = multiply(DEFAULT, g, x)
                rhs = multiply(DEFAULT, x, g).scale((-1) ** (p * q))
                assert lhs == rhs


def test_structure_constants_closure_and_supercommutativity():
    oz = odd_center_cached("default", 2)
    table = center_structure_constants(oz, DEFAULT)
    gens = oz.generators
    # unit acts as identity
    unit_idx = 0
    for j in range(len(gens)):
        ej = [1 if i == j else 0 for i in range(len(gens))]
        assert list(table[unit_idx, j]) == ej
        assert list(table[j, unit_idx]) == ej
    # supercommutativity on generator pairs
    for i, gi in enumerate(gens):
        pi = len(next(iter(gi.terms)).colored)
        for j, gj in enumerate(gens):
            pj = len(next(iter(gj.terms)).colored)
            lhs = multiply(DEFAULT, gi, gj)
            rhs = multiply(DEFAULT, gj, gi).scale((-1) ** (pi * pj))
            assert lhs == rhs


def test_even_center_ranks():
    assert even_center(1).total_rank() == 2
    assert even_center(3).total_rank() == 20


def test_serialization():
    text = ring_center(2, DEFAULT).serialize()
    lines = text.splitlines()
    assert lines[0] == "graded_rank: 0:1 1:0 2:2"
    assert lines[1] == "1*[(())|(())|{}] + 1*[()()|()()|{}]"
    assert len(lines) == 4
