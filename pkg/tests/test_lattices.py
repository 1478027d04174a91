"""Lattice tests.  The fundamental-group oracle enumerates the quotient
Z^l / (row space of the Cartan matrix) directly: a weight x lies in the
root lattice iff x C^-1 is integral, so the fractional parts of x C^-1
label the cosets."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from chevalley import fields as F, lattices as L, roots as R


def _inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                k = a[r][c]
                a[r] = [x - k * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def quotient_oracle(cartan):
    """Invariant factors of Z^l / row space, from the coset group itself."""
    n = len(cartan)
    inv = _inverse(cartan)
    gens = []
    for i in range(n):
        gens.append(tuple(inv[i][j] % 1 for j in range(n)))
    zero = tuple(Fraction(0) for _ in range(n))
    seen, frontier = {zero}, [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % 1 for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt

    def order(x):
        k, y = 1, x
        while y != zero:
            y = tuple((a + b) % 1 for a, b in zip(y, x))
            k += 1
        return k

    orders = [order(x) for x in seen]
    N = len(seen)
    # recover invariant factors from the k-torsion counts prod gcd(k, d_i)
    factors = []
    for cand in _factorizations(N):
        counts = {k: 1 for k in range(1, N + 1)}
        for k in counts:
            for d in cand:
                counts[k] *= gcd(k, d)
        if all(sum(1 for o in orders if k % o == 0) == counts[k] for k in counts):
            factors.append(cand)
    assert len(factors) == 1
    return factors[0]


def _factorizations(N):
    """Chains d_1 | d_2 | ... with product N, all d_i > 1."""
    out = []

    def rec(rem, prev, acc):
        if rem == 1:
            out.append(list(acc))
            return
        for d in range(2, rem + 1):
            if rem % d == 0 and (prev is None or d % prev == 0):
                rec(rem // d, d, acc + [d])
    rec(N, None, [])
    return out or [[]]


TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "D6",
         "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("label", TYPES)
def test_fundamental_group_matches_oracle(label):
    phi = R.build(label)
    assert L.fundamental_group(phi) == quotient_oracle([list(r) for r in phi.cartan])


@pytest.mark.parametrize("label,want", [("A3", [4]), ("D6", [2, 2]), ("F4", []), ("E6", [3]),
                                        ("E7", [2]), ("D5", [4]), ("B4", [2]), ("E8", [])])
def test_fundamental_group_values(label, want):
    assert L.fundamental_group(R.build(label)) == want


def test_smith_normal_form_small():
    assert L.invariant_factors([[2, 4], [6, 8]]) == [2, 4]
    assert L.invariant_factors([[1, 0], [0, 0]]) == [1, 0]


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
def test_snf_determinant_and_divisibility(m):
    d = L.invariant_factors(m)
    prod = 1
    for x in d:
        prod *= x
    assert abs(L.integer_det(m)) == prod
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_standard_lattices_a2():
    lats = L.standard_lattices(R.build("A2"))
    assert [x.tag for x in lats] == ["adjoint", "universal"]
    assert lats[0].index_in_sc == 3


def test_standard_lattices_d6_and_e8():
    assert len(L.standard_lattices(R.build("D6"))) == 4
    ad, sc = L.standard_lattices(R.build("E8"))
    assert ad.basis == sc.basis


F7 = F.make_field("prime", 7)


def _product(Lat, phi, idx, t):
    x = L.torus_identity(Lat, F7)
    for i in idx:
        x = x * L.h_chi(Lat, phi.simple[i - 1], F7(t))
    return x


def test_h_chi_at_one_is_identity():
    phi = R.build("D6")
    for Lat in L.standard_lattices(phi):
        assert L.h_chi(Lat, phi.simple[2], F7(1)).is_identity()


def test_d6_relations_separate_intermediate_lattices():
    phi = R.build("D6")
    orth, spin = L.lattice(phi, "orthogonal"), L.lattice(phi, "semi-spinor")
    assert _product(orth, phi, (5, 6), -1).is_identity()
    assert not _product(spin, phi, (5, 6), -1).is_identity()
    assert _product(spin, phi, (1, 3, 5), -1).is_identity()
    assert not _product(orth, phi, (1, 3, 5), -1).is_identity()


def test_sc_h_minus_one_has_order_two():
    for label in ("D6", "E7", "B3", "A3"):
        phi = R.build(label)
        sc = L.lattice(phi, "universal")
        for a in phi.simple:
            h = L.h_chi(sc, a, F7(-1))
            assert not h.is_identity() and (h * h).is_identity()


def test_d6_adjoint_sixteen_involutions():
    phi = R.build("D6")
    ad = L.lattice(phi, "adjoint")
    T = L.torus_involutions(ad, F7, [(phi.simple[i], -1) for i in range(4)])
    assert T.order == 16 and T.order_le_two == 16 and len(T.order_two) == 15


def test_d6_intermediate_order_two_counts():
    # frozen from exhaustive enumeration on both lattices
    phi = R.build("D6")
    for tag in ("orthogonal", "semi-spinor"):
        T = L.torus_involutions(L.lattice(phi, tag), F7, [(a, -1) for a in phi.simple])
        assert T.order == 32


def test_trivial_generator():
    phi = R.build("A2")
    T = L.torus_involutions(L.lattice(phi, "adjoint"), F7, [(phi.simple[0], 1)])
    assert T.order == 1
