"""Scission counts, the chronology part of the associator, its F2
cocycle/coboundary structure, and sign isomorphisms between rules.

Degrees of homogeneous elements live in the groupoid with one arrow per
ordered pair of matchings, so the associator data are tables indexed by
quadruples of matchings (triples of composable arrows), and the comparison
data between two rules by triples (pairs of arrows).
"""

from itertools import product as _product

from . import matchings as _m
from .arc_rings import (BasisMonomial, RingElement, multiply, ring_basis)
from .zlinalg import solve_f2


def scission_count(c, b, a):
    """S(c,b,a) = (d(c,b) + d(b,a) - d(c,a)) / 2, the number of splits in
    the (c,b,a) multiplication."""
    total = (_m.distance(c, b) + _m.distance(b, a) - _m.distance(c, a))
    assert total % 2 == 0, "scission count must be integral"
    return total // 2


def _block_monomials(top, bottom):
    k = len(_m.closed_diagram(top, bottom).circles)
    subsets = sorted(
        (frozenset(i + 1 for i in range(k) if mask >> i & 1)
         for mask in range(2 ** k)),
        key=lambda s: (len(s), tuple(sorted(s))))
    return [BasisMonomial(top.word, bottom.word, s) for s in subsets]


def _proportionality(pairs):
    """Sign s with left = s * right over all (left, right) element pairs, or
    None if every pair is zero; raises on any inconsistency."""
    sign = None
    for left, right in pairs:
        if left.is_zero() and right.is_zero():
            continue
        if left.is_zero() or right.is_zero():
            raise AssertionError("zero pattern mismatch between the maps")
        if sign is None:
            if left == right:
                sign = 1
            elif left == -right:
                sign = -1
            else:
                raise AssertionError("maps are not proportional by a sign")
        else:
            if left != right.scale(sign):
                raise AssertionError("inconsistent proportionality sign")
    return sign


class UndefinedSign(Exception):
    """Both composite maps of a quadruple vanish identically, so no sign can
    be read off.  This does happen (e.g. twice at n=2); tables mark such
    cells with None and downstream checks skip them."""


def phi0(rule, d, c, b, a):
    """Chronology sign: (xy)z = (-1)^(p(x)*S(c,b,a)) * phi0 * x(yz) on the
    whole block, as a proportionality of linear maps.  Raises UndefinedSign
    if both maps are identically zero."""
    S = scission_count(c, b, a)

    def pairs():
        for mx in _block_monomials(d, c):
            x = RingElement.monomial(mx)
            phi1 = (-1) ** (len(mx.colored) * S)
            for my in _block_monomials(c, b):
                y = RingElement.monomial(my)
                xy = multiply(rule, x, y)
                for mz in _block_monomials(b, a):
                    z = RingElement.monomial(mz)
                    left = multiply(rule, xy, z)
                    right = multiply(rule, x, multiply(rule, y, z))
                    yield left, right.scale(phi1)

    sign = _proportionality(pairs())
    if sign is None:
        raise UndefinedSign(f"both composite maps vanish on "
                            f"{d.word}|{c.word}|{b.word}|{a.word}")
    return sign


def phi0_table(rule, n):
    """{(d,c,b,a) words: bit or None}, bit = 1 iff phi0 = -1; None marks
    the cells where the sign is undefined."""
    mats = _m.enumerate_matchings(n)
    table = {}
    for d, c, b, a in _product(mats, repeat=4):
        try:
            table[d.word, c.word, b.word, a.word] = \
                (1 - phi0(rule, d, c, b, a)) // 2
        except UndefinedSign:
            table[d.word, c.word, b.word, a.word] = None
    return table


def cocycle_defect(rule, n, table=None, twisted=True):
    """Defect of the chronology cocycle identity on all quintuples whose
    five faces are defined; empty dict iff the identity holds there.

    The pentagon relates the five reassociations of 1.1.1.1, but the face
    through the composed pair carries x = 1.1 whose wedge length is the
    scission count of that pair, so its phi1 factor does not drop out.  The
    identity that actually holds is therefore the twisted one
        d^3(phi0)(g,h,k,l) = S(g,h) * S(k,l)  (mod 2),
    which reduces to the plain cocycle condition exactly where the cup
    square of S vanishes (e.g. everywhere it is testable at n <= 2).  Pass
    twisted=False to check the plain condition instead."""
    if table is None:
        table = phi0_table(rule, n)
    mats = _m.enumerate_matchings(n)
    words = [m.word for m in mats]
    of = {m.word: m for m in mats}
    defects = {}
    for e, d, c, b, a in _product(words, repeat=5):
        faces = (table[d, c, b, a], table[e, c, b, a], table[e, d, b, a],
                 table[e, d, c, a], table[e, d, c, b])
        if None in faces:
            continue
        v = faces[0] ^ faces[1] ^ faces[2] ^ faces[3] ^ faces[4]
        if twisted:
            v ^= (scission_count(of[e], of[d], of[c])
                  * scission_count(of[c], of[b], of[a])) & 1
        if v:
            defects[e, d, c, b, a] = v
    return defects


def solve_coboundary(table, n):
    """lambda0 over matching triples with d^2(lambda0) = table over F2 on
    every defined cell, or None.  Canonical solution: free variables zero."""
    words = [m.word for m in _m.enumerate_matchings(n)]
    triples = list(_product(words, repeat=3))
    col_of = {t: j for j, t in enumerate(triples)}
    rows, rhs = [], []
    for d, c, b, a in _product(words, repeat=4):
        if table[d, c, b, a] is None:
            continue
        row = [0] * len(triples)
        for t in ((c, b, a), (d, b, a), (d, c, a), (d, c, b)):
            row[col_of[t]] ^= 1
        rows.append(row)
        rhs.append(table[d, c, b, a])
    x = solve_f2(rows, rhs)
    if x is None:
        return None
    sol = {t: x[j] for t, j in col_of.items()}
    for (d, c, b, a), v in table.items():
        if v is not None:
            assert (sol[c, b, a] ^ sol[d, b, a] ^ sol[d, c, a]
                    ^ sol[d, c, b]) == v
    return sol


def rule_sign_ratio(rule1, rule2, c, b, a):
    """Proportionality sign between the block multiplication maps of the two
    rules on (c,b,a)."""

    def pairs():
        for my in _block_monomials(c, b):
            y = RingElement.monomial(my)
            for mz in _block_monomials(b, a):
                z = RingElement.monomial(mz)
                yield multiply(rule1, y, z), multiply(rule2, y, z)

    sign = _proportionality(pairs())
    if sign is None:
        raise AssertionError("block multiplication map is identically zero")
    return sign


def eta_table(rule1, rule2, n):
    """{(c,b,a) words: bit}, bit = 1 iff the two rules' block maps differ
    by -1."""
    mats = _m.enumerate_matchings(n)
    out = {}
    for c, b, a in _product(mats, repeat=3):
        out[c.word, b.word, a.word] = \
            (1 - rule_sign_ratio(rule1, rule2, c, b, a)) // 2
    return out


def first_phi0_difference(rule1, rule2, n):
    """First quadruple (in enumeration order) where the phi0 tables differ,
    or None."""
    t1 = phi0_table(rule1, n)
    t2 = phi0_table(rule2, n)
    for quad in sorted(t1):
        if t1[quad] != t2[quad]:
            return quad
    return None


def build_rule_isomorphism(rule1, rule2, n):
    """If the two rules have the same chronology associator: a per-pair sign
    table eps such that x -> (-1)^eps(block of x) * x is a ring isomorphism,
    verified on every structure constant; None if the associators differ."""
    if first_phi0_difference(rule1, rule2, n) is not None:
        return None
    eta = eta_table(rule1, rule2, n)
    words = [m.word for m in _m.enumerate_matchings(n)]
    # eta must be a 2-cocycle: its defect on quadruples vanishes
    for d, c, b, a in _product(words, repeat=4):
        defect = (eta[c, b, a] ^ eta[d, b, a] ^ eta[d, c, a] ^ eta[d, c, b])
        assert defect == 0, "eta is not a 2-cocycle despite equal associators"
    pairs = list(_product(words, repeat=2))
    col_of = {p: j for j, p in enumerate(pairs)}
    rows, rhs = [], []
    for c, b, a in _product(words, repeat=3):
        row = [0] * len(pairs)
        for p in ((c, b), (b, a), (c, a)):
            row[col_of[p]] ^= 1
        rows.append(row)
        rhs.append(eta[c, b, a])
    x = solve_f2(rows, rhs)
    assert x is not None, "delta eps = eta unsolvable despite 2-cocycle eta"
    eps = {p: x[j] for p, j in col_of.items()}

    # full structure-constant verification of x -> (-1)^eps * x
    def theta(elem):
        out = RingElement.zero(elem.n)
        for mono, coeff in elem.terms.items():
            s = -1 if eps[mono.top, mono.bottom] else 1
            out = out + RingElement.monomial(mono, s * coeff)
        return out

    basis = [mono for mono, _ in ring_basis(n)]
    for mx in basis:
        x1 = RingElement.monomial(mx)
        for my in basis:
            if mx.bottom != my.top:
                continue
            y1 = RingElement.monomial(my)
            lhs = theta(multiply(rule1, x1, y1))
            rhs1 = multiply(rule2, theta(x1), theta(y1))
            assert lhs == rhs1, "sign map is not a ring homomorphism"
    return eps
