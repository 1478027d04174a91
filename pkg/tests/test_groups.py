from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chevalley import groups as fg
from chevalley.errors import BudgetExceeded, NotAnInvolution
from chevalley.fields import finite_field, make_field
from chevalley.matrices import Matrix


def brute_psl2(q):
    """All of SL_2(F_q) modulo +-1 by direct search, as canonical code tuples."""
    f = finite_field(q)
    els = f.elements()
    out = set()
    for a, b, c, d in product(els, repeat=4):
        if f.sub(f.mul(a, d), f.mul(b, c)) == f.one:
            m1 = tuple(f.code(x) for x in (a, b, c, d))
            m2 = tuple(f.code(f.neg(x)) for x in (a, b, c, d))
            out.add(min(m1, m2, key=lambda t: sum(x * q ** k for k, x in enumerate(t))))
    return out


def brute_involutions(q):
    f = finite_field(q)
    G = brute_psl2(q)
    count = 0
    for t in G:
        a, b, c, d = (f.from_code(x) for x in t)
        sq = (f.add(f.mul(a, a), f.mul(b, c)), f.add(f.mul(a, b), f.mul(b, d)),
              f.add(f.mul(c, a), f.mul(d, c)), f.add(f.mul(c, b), f.mul(d, d)))
        if sq[1] == sq[2] == f.zero and sq[0] == sq[3] and sq[0] in (f.one, f.neg(f.one)):
            if not (b == c == f.zero and a == d):
                count += 1
    return len(G), count


@pytest.mark.parametrize("family,n,q,order", [
    ("SL", 2, 3, 24), ("PSL", 2, 7, 168), ("PSL", 3, 3, 5616), ("Sp", 4, 3, 51840),
    ("PSp", 4, 3, 25920), ("SO", 5, 3, 51840), ("EO", 5, 3, 25920), ("PSL", 2, 9, 360),
])
def test_orders(family, n, q, order):
    G = fg.enumerate(family, n, q)
    assert G.order == order == fg.predicted_order(family, n, q)


@pytest.mark.parametrize("q", [5, 7, 9])
def test_psl2_matches_brute_force(q):
    G = fg.enumerate("PSL", 2, q)
    brute = brute_psl2(q)
    got = {tuple(int(x) for x in G.elements[i].reshape(-1)) for i in range(G.order)}
    assert got == brute


@pytest.mark.parametrize("q,size", [(7, 21), (9, 45), (11, 55), (13, 91), (5, 15)])
def test_psl2_single_involution_class(q, size):
    G = fg.enumerate("PSL", 2, q)
    classes = fg.involution_classes(G)
    assert len(classes) == 1 and classes[0].size == size
    assert brute_involutions(q) == (G.order, size)


def test_trivial_group():
    T = fg.trivial_group()
    assert T.order == 1 and fg.involution_classes(T) == []


def test_budget():
    with pytest.raises(BudgetExceeded):
        fg.enumerate("PSL", 3, 5, budget=1000)


def test_psl2_7_centralizer():
    G = fg.enumerate("PSL", 2, 7)
    j = int(G.involutions()[0])
    C = fg.centralizer(G, [j])
    assert len(C) == 8
    assert fg.is_abelian(G, fg.derived_subgroup(G, C))
    assert len(fg.centralizer(G, [G.identity])) == G.order


def test_psl3_3_centralizer_not_metabelian():
    G = fg.enumerate("PSL", 3, 3)
    for c in fg.involution_classes(G):
        C = fg.centralizer(G, [c.representative])
        assert not fg.is_abelian(G, fg.derived_subgroup(G, C))


def test_center_and_quotient():
    G = fg.enumerate("SL", 2, 5)
    Z = fg.center_of(G, range(G.order))
    assert len(Z) == 2
    assert fg.central_quotient(G).order == 60
    assert fg.central_quotient(G, Z).order == 1


def test_derived_subgroup_of_sl2_3():
    G = fg.enumerate("SL", 2, 3)
    D = fg.derived_subgroup(G, range(G.order))
    assert len(D) == 8


def test_normalizer_contains_subgroup():
    G = fg.enumerate("PSL", 2, 7)
    H = fg.subgroup(G, [int(G.involutions()[0])])
    N = fg.normalizer(G, H)
    assert set(H.tolist()) <= set(N.tolist())


def test_class_kinds():
    kinds = {(c.kind, c.size) for c in fg.involution_classes(fg.enumerate("PSp", 4, 3))}
    assert kinds == {(("second_type", "square_minus_one"), 270), (("first_type", 2), 45)}


def test_classify_examples():
    f = make_field("prime", 5)
    A = Matrix.diagonal_matrix(f, [f.from_int(x) for x in (-1, -1, 1, 1)])
    assert fg.classify_projective_involution(A, "PSL") == ("first_type", 2)
    J = Matrix.from_values(f, [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    assert fg.classify_projective_involution(J, "PSp")[0] == "second_type"
    with pytest.raises(NotAnInvolution):
        fg.classify_projective_involution(Matrix.identity(f, 3), "PSL")


def test_iso_small_field():
    assert not fg.is_field(fg.ring_zmod(4))
    a, b = make_field("quadratic", 3, 2), make_field("quadratic", 5, 3)
    assert fg.iso_small_field(fg.ring_from_field(make_field("quadratic", 3)), a)
    assert fg.iso_small_field(fg.ring_from_field(make_field("quadratic", 5, 2)), b)
    assert fg.iso_small_field(fg.ring_zmod(7), finite_field(7))
    assert not fg.iso_small_field(fg.ring_zmod(7), finite_field(5))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([("PSL", 2, 7), ("SL", 2, 5), ("PSL", 2, 9)]), st.data())
def test_group_axioms(spec, data):
    G = fg.enumerate(*spec)
    i, j, k = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k))
    assert G.mul(i, G.inv(i)) == G.identity
    assert G.mul(G.identity, i) == i


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([("PSL", 2, 7), ("PSp", 4, 3), ("PSL", 3, 3)]))
def test_classes_partition_involutions(spec):
    G = fg.enumerate(*spec)
    classes = fg.involution_classes(G)
    members = np.concatenate([c.members for c in classes]) if classes else np.array([])
    assert sorted(members.tolist()) == sorted(G.involutions().tolist())
    assert all(G.order % c.size == 0 for c in classes)


@pytest.mark.slow
def test_psl4_3_involutions_against_counting():
    """Class sizes from centralizer orders: |GL_4(3)| / |C|, with C the
    projective centralizer (GL_2 x GL_2 extended by a swap, and GL_2(9)
    extended by Frobenius)."""
    gl = lambda n, q: np.prod([q ** n - q ** i for i in range(n)], dtype=object)
    G = fg.enumerate("PSL", 4, 3)
    assert G.order == 6065280
    sizes = sorted((c.size, c.kind) for c in fg.involution_classes(G))
    first = gl(4, 3) // (gl(2, 3) ** 2 * 2)
    second = gl(4, 3) // (gl(2, 9) * 2)
    assert [s for s, _ in sizes] == sorted([first, second]) == [2106, 5265]
    assert dict((k, s) for s, k in sizes) == {("first_type", 2): 5265, ("second_type", "case3"): 2106}
