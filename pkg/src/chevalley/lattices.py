"""Weight lattices, fundamental groups and the abstract torus Hom(L, K*).

Lattices are stored by a basis written in the fundamental-weight basis, so
the universal lattice is Z^l and the adjoint lattice is spanned by the
columns of the Cartan matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NotInvertible, SubgroupBudgetExceeded
from .fields import Field, FieldElement
from .roots import Root, RootSystem, _dot, pairing

# ------------------------------------------------------ integer linear algebra


def integer_det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return (D, U, V) with U*M*V = D diagonal, d_1 | d_2 | ..., d_i >= 0.

    Full pivoting: at each stage the entry of least absolute value in the
    remaining block becomes the pivot."""
    a = [list(r) for r in m]
    rows, cols = len(a), len(a[0]) if a else 0
    U, V = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):      # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        block = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not block:
            break
        _, i, j = min(block)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    done = False
            if not done:
                block = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                block += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(block)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                   if a[i][j] % p]
            if bad:
                add_row(t, bad[0][0], 1)
                continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return a, U, V


def invariant_factors(m: Sequence[Sequence[int]]) -> list:
    d, _, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def hermite_rows(vectors: Iterable[Sequence[int]]) -> list:
    """Hermite normal form basis of the Z-span of integer vectors: row
    echelon, positive pivots, entries above each pivot reduced into
    [0, pivot).  Equal lattices get identical bases."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    out, col = [], 0
    while rows and col < n:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(n):
                    r[k] -= q * piv[k]
            nz = [r for r in nz if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        out.append(piv)
        rows = [r for r in rows if r is not piv and any(r)]
        col += 1
    for i, piv in enumerate(out):
        c = next(k for k in range(n) if piv[k])
        for r in out[:i]:
            q = r[c] // piv[c]
            if q:
                for k in range(n):
                    r[k] -= q * piv[k]
    return out


def solve_rational(a: Sequence[Sequence], b: Sequence) -> Optional[list]:
    """Solve x*A = b for a square invertible A over Q (row-vector convention)."""
    n = len(a)
    # transpose: A^T x^T = b^T
    m = [[Fraction(a[j][i]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] for i in range(n)]


# ----------------------------------------------------------------- lattices

@dataclass(frozen=True)
class WeightLattice:
    system: RootSystem
    basis: tuple          # rows in the fundamental-weight basis
    tag: str              # adjoint | universal | intermediate(orthogonal) | ...

    @property
    def rank(self) -> int:
        return self.system.rank

    @property
    def index_in_sc(self) -> int:
        return abs(integer_det([[int(x) for x in r] for r in self.basis]))

    @property
    def index_over_ad(self) -> int:
        return abs(integer_det(root_lattice_basis(self.system))) // self.index_in_sc

    def contains(self, weight: Sequence) -> bool:
        x = solve_rational(self.basis, weight)
        return x is not None and all(v.denominator == 1 for v in x)

    def __repr__(self):
        return f"WeightLattice({self.system.label}, {self.tag})"


def omega_coords(phi: RootSystem, v: Sequence[int]) -> tuple:
    """Coordinates <v, a_i> of an ambient (doubled) vector in the fundamental
    weights; raises if v is not a weight."""
    out = []
    for s in phi.simple:
        num, den = 2 * _dot(v, s.coords), _dot(s.coords, s.coords)
        if num % den:
            raise ValueError(f"{v} is not an integral weight")
        out.append(num // den)
    return tuple(out)


def root_lattice_basis(phi: RootSystem) -> list:
    l = phi.rank
    return [[phi.cartan[i][j] for i in range(l)] for j in range(l)]


def _lattice(phi, gens, tag) -> WeightLattice:
    basis = hermite_rows(gens)
    assert len(basis) == phi.rank
    return WeightLattice(phi, tuple(tuple(r) for r in basis), tag)


def standard_lattices(phi: RootSystem) -> list:
    l = phi.rank
    ad = _lattice(phi, root_lattice_basis(phi), "adjoint")
    sc = WeightLattice(phi, tuple(tuple(int(i == j) for j in range(l)) for i in range(l)),
                       "universal")
    out = [ad, sc]
    if phi.type_label == "D" and l >= 2:
        dim = phi.dim
        e = [tuple(2 if k == i else 0 for k in range(dim)) for i in range(dim)]
        orth = [omega_coords(phi, v) for v in e]
        out.append(_lattice(phi, root_lattice_basis(phi) + orth, "intermediate(orthogonal)"))
        if l % 2 == 0:
            spin = omega_coords(phi, tuple(1 for _ in range(dim)))
            out.append(_lattice(phi, root_lattice_basis(phi) + [spin],
                                "intermediate(semi-spinor)"))
    return out


def lattice(phi: RootSystem, tag: str) -> WeightLattice:
    for L in standard_lattices(phi):
        if L.tag == tag or L.tag == f"intermediate({tag})":
            return L
    raise KeyError(tag)


def fundamental_group(phi: RootSystem) -> list:
    """Invariant factors (> 1) of the weight lattice modulo the root lattice."""
    return [d for d in invariant_factors([list(r) for r in phi.cartan]) if d != 1]


# -------------------------------------------------------------------- torus

@dataclass(frozen=True)
class TorusElement:
    lattice: WeightLattice
    values: tuple         # raw field values, one per basis vector
    field: Field

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        f = self.field
        return TorusElement(self.lattice, tuple(f.mul(a, b) for a, b in zip(self.values, other.values)), f)

    def is_identity(self) -> bool:
        return all(v == self.field.one for v in self.values)

    def __call__(self, weight: Sequence[int]):
        """chi(weight) for a weight of the lattice given in fundamental-weight
        coordinates."""
        x = solve_rational(self.lattice.basis, weight)
        if x is None or any(v.denominator != 1 for v in x):
            raise ValueError("weight is not in the lattice")
        f, out = self.field, self.field.one
        for c, v in zip(x, self.values):
            out = f.mul(out, f.power(v, int(c)))
        return FieldElement(f, out)


def coroot_coefficients(phi: RootSystem, alpha: Root) -> tuple:
    """Coefficients of the coroot of alpha in the simple coroots."""
    n = phi.coefficients[alpha]
    la = alpha.length2x4
    out = []
    for c, s in zip(n, phi.simple):
        num = c * s.length2x4
        assert num % la == 0
        out.append(num // la)
    return tuple(out)


def h_chi(L: WeightLattice, alpha: Root, t) -> TorusElement:
    """The character lambda -> t^<lambda, alpha> on the lattice basis."""
    if isinstance(t, FieldElement):
        f, raw = t.field, t.raw
    else:
        raise TypeError("t must be a FieldElement")
    if raw == f.zero:
        raise NotInvertible("h_chi needs an invertible parameter")
    m = coroot_coefficients(L.system, alpha)
    vals = tuple(f.power(raw, sum(int(c) * k for c, k in zip(b, m))) for b in L.basis)
    return TorusElement(L, vals, f)


def torus_identity(L: WeightLattice, f: Field) -> TorusElement:
    return TorusElement(L, tuple(f.one for _ in L.basis), f)


@dataclass
class TorusSubgroup:
    order: int
    elements: list
    order_two: list        # elements of order exactly 2
    order_le_two: int      # including the identity


def torus_involutions(L: WeightLattice, f: Field, generators: Sequence,
                      budget: int = 10 ** 6) -> TorusSubgroup:
    """Enumerate the subgroup of Hom(L, K*) generated by the given elements,
    each a TorusElement or an (alpha, t) pair."""
    if not f.is_finite:
        raise ValueError("torus enumeration needs a finite field")
    gens = []
    for g in generators:
        if isinstance(g, TorusElement):
            gens.append(g)
        else:
            a, t = g
            gens.append(h_chi(L, a, t if isinstance(t, FieldElement) else f(t)))
    one = torus_identity(L, f)
    seen = {one.values: one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.values not in seen:
                    seen[y.values] = y
                    nxt.append(y)
                    if len(seen) > budget:
                        raise SubgroupBudgetExceeded(f"torus subgroup passed {budget}")
        frontier = nxt
    elems = [seen[k] for k in sorted(seen)]
    two = [x for x in elems if not x.is_identity() and (x * x).is_identity()]
    return TorusSubgroup(len(elems), elems, two, len(two) + 1)
