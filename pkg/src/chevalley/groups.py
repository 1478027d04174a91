"""Finite matrix groups at desk scale.

A ``FiniteGroupModel`` holds every element of a matrix group over a finite
field as an array of field codes.  Elements are numbered by the order of an
integer key computed from the (canonical) matrix, so lookups are binary
searches.  For projective groups the canonical matrix is the least, by key,
among the products with the central elements.

Products, conjugation and centralizers are vectorised with numpy; small
groups also get a full Cayley table.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, NotAnInvolution, UnsupportedFamily
from .fields import Field, finite_field, make_field
from .matrices import Matrix

DEFAULT_BUDGET = 10 ** 7
TABLE_LIMIT = 1500


# ------------------------------------------------------- vectorised arithmetic

class Arith:
    """Field-code arithmetic on numpy arrays of shape (..., n, n)."""

    def __init__(self, field: Field):
        if not field.is_finite:
            raise ValueError("finite field required")
        self.field = field
        self.p = field.p
        self.q = field.order
        self.quad = field.kind == "quadratic"
        self.nr = getattr(field, "nonresidue", 0)

    def split(self, a):
        return a % self.p, a // self.p

    def join(self, a0, a1):
        return a0 + self.p * a1

    def matmul(self, a, b):
        p = self.p
        if not self.quad:
            return (a @ b) % p
        a0, a1 = self.split(a)
        b0, b1 = self.split(b)
        c0 = (a0 @ b0 + self.nr * (a1 @ b1)) % p
        c1 = (a0 @ b1 + a1 @ b0) % p
        return self.join(c0, c1)

    def matrix_codes(self, m: Matrix) -> np.ndarray:
        f = self.field
        return np.array([[f.code(x) for x in r] for r in m.rows], dtype=np.int64)

    def to_matrix(self, a: np.ndarray) -> Matrix:
        f = self.field
        return Matrix(f, [[f.from_code(int(x)) for x in r] for r in a])


def _keys(a: np.ndarray, q: int) -> np.ndarray:
    n2 = a.shape[-1] * a.shape[-2]
    flat = a.reshape(a.shape[:-2] + (n2,))
    w = q ** np.arange(n2, dtype=np.int64)
    return flat @ w


# ------------------------------------------------------------ group model

@dataclass(frozen=True)
class GroupSpec:
    family: str            # PSL, SL, Sp, PSp, SO, EO, closure
    n: int
    q: int
    name: str = ""

    def __str__(self):
        return self.name or f"{self.family}_{self.n}(F_{self.q})"


class FiniteGroupModel:
    """All elements of a finite matrix group, modulo a central subgroup."""

    def __init__(self, spec: GroupSpec, field: Field, elements: np.ndarray,
                 inverses: np.ndarray, central: np.ndarray, generators: Sequence[int] = ()):
        self.spec = spec
        self.field = field
        self.arith = Arith(field)
        self.n = elements.shape[-1]
        self.central = central            # central matrices, codes (k, n, n)
        self.keys = _keys(elements, field.order)
        order = np.argsort(self.keys)
        self.keys = self.keys[order]
        self.elements = elements[order]
        self._inv_keys = inverses[order]
        self._table = None
        self._inv = None
        eye = np.eye(self.n, dtype=np.int64)
        self.identity = int(self.lookup(self.canonical(eye[None])[0:1])[0])
        self.generators = list(generators)

    # ---------------------------------------------------------------- basics
    @property
    def order(self) -> int:
        return len(self.keys)

    @property
    def projective(self) -> bool:
        return len(self.central) > 1

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroupModel({self.spec}, order={self.order})"

    def canonical(self, a: np.ndarray) -> np.ndarray:
        if len(self.central) == 1:
            return a
        cands = np.stack([self.arith.matmul(a, z) for z in self.central])
        k = _keys(cands, self.field.order)
        best = np.argmin(k, axis=0)
        return cands[best, np.arange(a.shape[0])]

    def lookup(self, a: np.ndarray, canonical: bool = True) -> np.ndarray:
        """Ids of the matrices in a (shape (m, n, n)); raises if absent."""
        if canonical:
            a = self.canonical(a)
        k = _keys(a, self.field.order)
        pos = np.searchsorted(self.keys, k)
        pos = np.minimum(pos, len(self.keys) - 1)
        if not np.all(self.keys[pos] == k):
            raise KeyError("matrix is not in the group")
        return pos

    def id_of(self, m) -> int:
        a = self.arith.matrix_codes(m) if isinstance(m, Matrix) else np.asarray(m, dtype=np.int64)
        return int(self.lookup(a[None])[0])

    def contains(self, m) -> bool:
        try:
            self.id_of(m)
            return True
        except KeyError:
            return False

    def matrix(self, i: int) -> Matrix:
        return self.arith.to_matrix(self.elements[i])

    # ------------------------------------------------------------ products
    def mul_many(self, i, j) -> np.ndarray:
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        if self._table is not None:
            return self._table[i, j]
        i, j = np.broadcast_arrays(i, j)
        shape = i.shape
        i, j = i.ravel(), j.ravel()
        out = np.empty(len(i), dtype=np.int64)
        step = 1 << 16
        for s in range(0, len(i), step):
            prod_ = self.arith.matmul(self.elements[i[s:s + step]].astype(np.int64),
                                     self.elements[j[s:s + step]].astype(np.int64))
            out[s:s + step] = self.lookup(prod_)
        return out.reshape(shape)

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return int(self._table[i, j])
        return int(self.mul_many([i], [j])[0])

    @property
    def inverses(self) -> np.ndarray:
        if self._inv is None:
            pos = np.searchsorted(self.keys, self._inv_keys)
            self._inv = pos
        return self._inv

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    def table(self) -> np.ndarray:
        if self._table is None:
            N = self.order
            if N > TABLE_LIMIT * 4:
                raise BudgetExceeded(f"Cayley table of order {N} is too large")
            all_ = np.arange(N)
            t = np.empty((N, N), dtype=np.int32 if N < 2 ** 31 else np.int64)
            for i in range(N):
                t[i] = self.mul_many(np.full(N, i), all_)
            self._table = t
        return self._table

    def ensure_table(self):
        if self.order <= TABLE_LIMIT:
            self.table()
        return self

    def conj_many(self, g: int, xs) -> np.ndarray:
        """g x g^-1 for every x in xs."""
        xs = np.asarray(xs, dtype=np.int64)
        return self.mul_many(self.mul_many(np.full(len(xs), g), xs), np.full(len(xs), self.inv(g)))

    def power(self, i: int, k: int) -> int:
        r, b = self.identity, i
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def element_orders(self) -> np.ndarray:
        N = self.order
        orders = np.zeros(N, dtype=np.int64)
        cur = np.arange(N)
        k = 1
        all_ = np.arange(N)
        while np.any(orders == 0):
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            cur = self.mul_many(cur, all_)
            k += 1
        return orders

    def involutions(self) -> np.ndarray:
        all_ = np.arange(self.order)
        sq = self.mul_many(all_, all_)
        return np.nonzero((sq == self.identity) & (all_ != self.identity))[0]

    def generating_set(self) -> list:
        if self.generators:
            return list(self.generators)
        return greedy_generators(self, range(self.order))


# ------------------------------------------------------------- enumeration

def _sorted_contains(sorted_keys: np.ndarray, k: np.ndarray) -> np.ndarray:
    pos = np.minimum(np.searchsorted(sorted_keys, k), len(sorted_keys) - 1)
    return sorted_keys[pos] == k


def _storage_dtype(q: int):
    return np.uint8 if q <= 255 else np.int64


def closure(field: Field, generators: Sequence[np.ndarray], central: Optional[Sequence] = None,
            spec: Optional[GroupSpec] = None, budget: int = DEFAULT_BUDGET,
            expected: Optional[int] = None, chunk: int = 1 << 15) -> FiniteGroupModel:
    """Breadth-first closure of matrix generators (codes arrays).

    Each layer is processed in chunks; inverses ride along (the inverse of
    m*g is g^-1 * m^-1) so no matrix is ever inverted by elimination."""
    ar = Arith(field)
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    n = gens[0].shape[0] if gens else 1
    eye = np.eye(n, dtype=np.int64)
    if central is None:
        central = [eye]
    central = np.stack([np.asarray(z, dtype=np.int64) for z in central])
    ginv = [ar.matrix_codes(ar.to_matrix(g).inverse()) for g in gens]
    q = field.order
    dt = _storage_dtype(q)

    def canon(a):
        if len(central) == 1:
            return a
        cands = np.stack([ar.matmul(a, z) for z in central])
        k = _keys(cands, q)
        b = np.argmin(k, axis=0)
        return cands[b, np.arange(a.shape[0])]

    start = canon(eye[None])
    seen_keys = _keys(start, q)
    elems = [start.astype(dt)]
    inv_keys = [seen_keys.copy()]
    frontier, frontier_inv = start.astype(dt), start.astype(dt)
    total = 1
    while len(frontier):
        layer_k, layer_m, layer_i = [], [], []
        for s in range(0, len(frontier), chunk):
            fm = frontier[s:s + chunk].astype(np.int64)
            fi = frontier_inv[s:s + chunk].astype(np.int64)
            for g, gi in zip(gens, ginv):
                m = canon(ar.matmul(fm, g))
                k = _keys(m, q)
                k, first = np.unique(k, return_index=True)
                fresh = ~_sorted_contains(seen_keys, k)
                if not fresh.any():
                    continue
                idx = first[fresh]
                layer_k.append(k[fresh])
                layer_m.append(m[idx].astype(dt))
                layer_i.append(ar.matmul(gi, fi[idx]).astype(dt))
        if not layer_k:
            break
        k = np.concatenate(layer_k)
        k, first = np.unique(k, return_index=True)
        m = np.concatenate(layer_m)[first]
        mi = np.concatenate(layer_i)[first]
        total += len(k)
        if total > budget:
            raise BudgetExceeded(f"closure passed {budget} elements")
        seen_keys = np.union1d(seen_keys, k)
        elems.append(m)
        for s in range(0, len(mi), chunk):
            inv_keys.append(_keys(canon(mi[s:s + chunk].astype(np.int64)), q))
        frontier, frontier_inv = m, mi
    E = np.concatenate(elems)
    del elems
    model = FiniteGroupModel(spec or GroupSpec("closure", n, q), field, E,
                             np.concatenate(inv_keys), central)
    if expected is not None and model.order != expected:
        raise AssertionError(f"{model.spec}: enumerated {model.order}, formula says {expected}")
    model.generators = [int(x) for x in model.lookup(np.stack(gens))] if gens else []
    return model.ensure_table()


def sl_order(n: int, q: int) -> int:
    return q ** (n * (n - 1) // 2) * prod(q ** i - 1 for i in range(2, n + 1))


def sp_order(l: int, q: int) -> int:
    return q ** (l * l) * prod(q ** (2 * i) - 1 for i in range(1, l + 1))


def so_odd_order(l: int, q: int) -> int:
    return q ** (l * l) * prod(q ** (2 * i) - 1 for i in range(1, l + 1))


def so_even_order(l: int, q: int) -> int:
    return q ** (l * (l - 1)) * (q ** l - 1) * prod(q ** (2 * i) - 1 for i in range(1, l))


def predicted_order(family: str, n: int, q: int) -> int:
    fam = family.upper()
    if fam == "SL":
        return sl_order(n, q)
    if fam == "PSL":
        return sl_order(n, q) // gcd(n, q - 1)
    if fam in ("SP", "PSP"):
        if n % 2:
            raise UnsupportedFamily("symplectic groups need even n")
        o = sp_order(n // 2, q)
        return o if fam == "SP" else o // 2
    if fam in ("SO", "EO"):
        l = n // 2
        o = so_odd_order(l, q) if n % 2 else so_even_order(l, q)
        return o if fam == "SO" else o // 2
    raise UnsupportedFamily(f"no order formula for {family}")


def _field_basis(field: Field) -> list:
    """Codes of an F_p-basis of the field."""
    return [1] if field.kind == "prime" else [1, field.p]


def _scalar(n: int, c: int, field: Field) -> np.ndarray:
    return np.eye(n, dtype=np.int64) * c


def _scalars(field: Field, n: int, power: int) -> list:
    f = field
    return [_scalar(n, f.code(x), f) for x in f.elements()
            if x != f.zero and f.power(x, power) == f.one]


def _root_generators(label: str, variant: str, field: Field) -> list:
    from .reps import representation, x_elem
    from .roots import build
    phi = build(label)
    rep = representation(phi, variant, field)
    ar = Arith(field)
    gens = []
    for a in phi.roots:
        for c in _field_basis(field):
            gens.append(ar.matrix_codes(x_elem(rep, a, field.from_code(c)).matrix))
    return gens


def enumerate_group(spec: GroupSpec, budget: int = DEFAULT_BUDGET) -> FiniteGroupModel:
    return _enumerate(spec.family, spec.n, spec.q, budget)


@lru_cache(maxsize=32)
def _enumerate(family: str, n: int, q: int, budget: int) -> FiniteGroupModel:
    f = finite_field(q)
    fam = family.upper()
    expected = predicted_order(fam, n, q)
    if expected > budget:
        raise BudgetExceeded(f"{family}_{n}(F_{q}) has order {expected} > budget {budget}")
    spec = GroupSpec({"SP": "Sp", "PSP": "PSp"}.get(fam, fam), n, q)
    if fam in ("SL", "PSL"):
        gens = []
        for i in range(n):
            for j in range(n):
                if i != j:
                    for c in _field_basis(f):
                        g = np.eye(n, dtype=np.int64)
                        g[i, j] = c
                        gens.append(g)
        central = _scalars(f, n, n) if fam == "PSL" else None
        return closure(f, gens, central, spec, budget, expected)
    if fam in ("SP", "PSP"):
        l = n // 2
        if l == 1:
            gens = [np.array([[1, c], [0, 1]]) for c in _field_basis(f)] + \
                   [np.array([[1, 0], [c, 1]]) for c in _field_basis(f)]
        else:
            gens = _root_generators(f"C{l}", "symplectic", f)
        central = _scalars(f, n, 2) if fam == "PSP" else None
        return closure(f, gens, central, spec, budget, expected)
    if fam in ("SO", "EO"):
        l = n // 2
        if n % 2:
            if l < 2:
                raise UnsupportedFamily("orthogonal groups need n >= 5 or n even >= 4")
            gens = _root_generators(f"B{l}", "odd_orthogonal", f)
        else:
            if l < 2:
                raise UnsupportedFamily("orthogonal groups need n >= 5 or n even >= 4")
            gens = _root_generators(f"D{l}", "even_orthogonal", f)
        if fam == "SO":
            nu = next(x for x in f.elements() if x != f.zero and f.sqrt(x) is None)
            d = np.eye(n, dtype=np.int64)
            d[0, 0] = f.code(nu)
            d[n - 1, n - 1] = f.code(f.inv(nu))
            gens.append(d)
        return closure(f, gens, None, spec, budget, expected)
    raise UnsupportedFamily(f"unknown family {family}")


def enumerate(family_or_spec, n: Optional[int] = None, q: Optional[int] = None,
              budget: int = DEFAULT_BUDGET) -> FiniteGroupModel:
    """Enumerate a named family, e.g. enumerate("PSL", 2, 7)."""
    if isinstance(family_or_spec, GroupSpec):
        return enumerate_group(family_or_spec, budget)
    return _enumerate(family_or_spec, n, q, budget)


def trivial_group(q: int = 3) -> FiniteGroupModel:
    f = finite_field(q)
    return closure(f, [np.eye(1, dtype=np.int64)], None, GroupSpec("closure", 1, q, "trivial"))


# ---------------------------------------------------------- subgroups

def subgroup(G: FiniteGroupModel, S: Iterable[int], budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Sorted ids of the subgroup generated by S."""
    gens = np.unique(np.asarray(list(S), dtype=np.int64))
    seen = np.zeros(G.order, dtype=bool)
    seen[G.identity] = True
    frontier = np.array([G.identity])
    count = 1
    while len(frontier):
        prods = G.mul_many(frontier[:, None], gens[None, :]).ravel()
        prods = np.unique(prods)
        prods = prods[~seen[prods]]
        seen[prods] = True
        count += len(prods)
        if count > budget:
            raise BudgetExceeded(f"subgroup closure passed {budget}")
        frontier = prods
    return np.nonzero(seen)[0]


def greedy_generators(G: FiniteGroupModel, S: Iterable[int]) -> list:
    """A small generating set for <S>: keep elements not yet generated."""
    S = [int(s) for s in S]
    gens = []
    cur = np.zeros(G.order, dtype=bool)
    cur[G.identity] = True
    for s in S:
        if not cur[s]:
            gens.append(s)
            cur[:] = False
            cur[subgroup(G, gens)] = True
    return gens


def centralizer(G: FiniteGroupModel, S: Iterable[int]) -> np.ndarray:
    all_ = np.arange(G.order)
    mask = np.ones(G.order, dtype=bool)
    for s in set(int(x) for x in S):
        mask &= G.mul_many(all_, s) == G.mul_many(s, all_)
    return np.nonzero(mask)[0]


def normalizer(G: FiniteGroupModel, H: Iterable[int]) -> np.ndarray:
    H = np.unique(np.asarray(list(H), dtype=np.int64))
    inH = np.zeros(G.order, dtype=bool)
    inH[H] = True
    all_ = np.arange(G.order)
    mask = np.ones(G.order, dtype=bool)
    for h in greedy_generators(G, H):
        mask &= inH[G.mul_many(G.mul_many(all_, h), G.inverses)]
    return np.nonzero(mask)[0]


def normal_closure(G: FiniteGroupModel, T: Iterable[int], within: Sequence[int]) -> np.ndarray:
    """Smallest subgroup containing T and normalised by the elements `within`."""
    cur = set(int(t) for t in T)
    while True:
        H = subgroup(G, cur)
        gens = greedy_generators(G, H)
        extra = set()
        for g in within:
            for c in G.conj_many(g, gens):
                extra.add(int(c))
        if extra <= set(H.tolist()):
            return H
        cur = set(gens) | extra


def derived_subgroup(G: FiniteGroupModel, S: Iterable[int]) -> np.ndarray:
    """Commutator subgroup of <S>."""
    H = subgroup(G, S)
    gens = greedy_generators(G, H)
    comms = set()
    for a in gens:
        for b in gens:
            ab = G.mul(a, b)
            comms.add(G.mul(ab, G.mul(G.inv(a), G.inv(b))))
    return normal_closure(G, comms, gens)


def center_of(G: FiniteGroupModel, S: Iterable[int]) -> np.ndarray:
    """Center of <S>."""
    H = subgroup(G, S)
    gens = greedy_generators(G, H)
    C = set(centralizer(G, gens).tolist())
    return np.array([h for h in H if int(h) in C], dtype=np.int64)


def is_abelian(G: FiniteGroupModel, H: Iterable[int]) -> bool:
    gens = greedy_generators(G, H)
    for a in gens:
        for b in gens:
            if G.mul(a, b) != G.mul(b, a):
                return False
    return True


def central_quotient(G: FiniteGroupModel, S: Optional[Iterable[int]] = None) -> FiniteGroupModel:
    """<S>/Z(<S>) as a new model (S defaults to the whole group)."""
    S = list(range(G.order)) if S is None else list(S)
    H = subgroup(G, S)
    Z = center_of(G, H)
    gens = greedy_generators(G, H)
    central = [G.arith.matmul(G.elements[z].astype(np.int64), z0) for z in Z for z0 in G.central]
    # deduplicate central matrices
    cz = np.stack(central)
    _, first = np.unique(_keys(cz, G.field.order), return_index=True)
    cz = cz[np.sort(first)]
    spec = GroupSpec("closure", G.n, G.field.order, f"{G.spec}/Z" if S is None else "quotient")
    return closure(G.field, [G.elements[g].astype(np.int64) for g in gens] or [np.eye(G.n, dtype=np.int64)],
                   cz, spec)


# ---------------------------------------------------------- involutions

@dataclass
class InvolutionClass:
    kind: tuple
    size: int
    representative: int
    members: np.ndarray = dc_field(repr=False, default=None)


def conjugacy_orbit(G: FiniteGroupModel, x: int, gens: Optional[Sequence[int]] = None) -> np.ndarray:
    gens = gens if gens is not None else G.generating_set()
    seen = {int(x)}
    frontier = [int(x)]
    while frontier:
        fr = np.array(frontier)
        new = []
        for g in gens:
            for y in G.conj_many(g, fr):
                y = int(y)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return np.array(sorted(seen), dtype=np.int64)


def involution_classes(G: FiniteGroupModel, classify: bool = True) -> list:
    invs = G.involutions()
    left = set(int(i) for i in invs)
    gens = G.generating_set()
    out = []
    for x in invs:
        x = int(x)
        if x not in left:
            continue
        orb = conjugacy_orbit(G, x, gens)
        left -= set(orb.tolist())
        kind = ("unclassified",)
        if classify and G.spec.family in _CLASSIFIABLE:
            kind = classify_projective_involution(G.matrix(x), G.spec.family)
        out.append(InvolutionClass(kind, len(orb), x, orb))
    return out


_CLASSIFIABLE = {"PSL", "SL", "Sp", "PSp", "SO", "EO"}


def _kernel_dim(m: Matrix) -> int:
    from .matrices import nullspace
    return len(nullspace(m.field, [list(r) for r in m.rows]))


def classify_projective_involution(A: Matrix, family: str) -> tuple:
    """Type of the image of A as an involution.

    ("first_type", k): A^2 = E after scaling, k eigenvalues -1 (canonical
    min(k, n-k) when -A represents the same element);
    ("second_type", "case2", k): A^2 = lambda E with sqrt(lambda) in K but
    sqrt(lambda)^n = -1;
    ("second_type", "case3"): sqrt(lambda) not in K;
    ("second_type", "square_minus_one"): A^2 = -E in Sp or SO."""
    f, n = A.field, A.n
    A2 = A * A
    if not A2.is_scalar():
        raise NotAnInvolution("A^2 is not scalar")
    lam = A2.rows[0][0]
    fam = family.upper()
    projective = fam in ("PSL", "PSP")
    if A.is_scalar() and (projective or A.is_identity()):
        raise NotAnInvolution("A is central")
    if not projective and lam != f.one:
        raise NotAnInvolution("A^2 != E in a linear group")
    E = Matrix.identity(f, n)
    minus_ok = fam in ("PSP",) or (fam == "PSL" and n % 2 == 0)

    def first(k):
        return ("first_type", min(k, n - k) if minus_ok else k)

    if lam == f.one:
        return first(_kernel_dim(A + E))
    if fam != "PSL":
        if lam == f.neg(f.one):
            return ("second_type", "square_minus_one")
        raise NotAnInvolution("unexpected scalar square")
    s = f.sqrt(lam)
    if s is None:
        return ("second_type", "case3")
    for r in (s, f.neg(s)):
        if f.power(r, n) == f.one:
            B = A.scale(f.inv(r))
            return first(_kernel_dim(B + E))
    k = _kernel_dim(A + E.scale(s))
    return ("second_type", "case2", min(k, n - k))


# ------------------------------------------------------------ small rings

@dataclass
class RingModel:
    """A finite ring on 0..size-1 given by operation tables."""
    size: int
    add: list
    mul: list
    zero: int
    one: int
    labels: Optional[list] = None


def ring_from_field(F: Field) -> RingModel:
    els = F.elements()
    code = {x: i for i, x in zip(range(len(els)), els)}
    add = [[code[F.add(a, b)] for b in els] for a in els]
    mul = [[code[F.mul(a, b)] for b in els] for a in els]
    return RingModel(len(els), add, mul, code[F.zero], code[F.one], [F.fmt(x) for x in els])


def ring_zmod(m: int) -> RingModel:
    return RingModel(m, [[(a + b) % m for b in range(m)] for a in range(m)],
                     [[(a * b) % m for b in range(m)] for a in range(m)], 0, 1 % m)


def is_field(R: RingModel) -> bool:
    n = R.size
    if n < 2 or R.zero == R.one:
        return False
    rng = range(n)
    for a in rng:
        for b in rng:
            if R.add[a][b] != R.add[b][a] or R.mul[a][b] != R.mul[b][a]:
                return False
    for a in rng:
        if R.add[R.zero][a] != a or R.mul[R.one][a] != a:
            return False
        if a != R.zero and R.one not in R.mul[a]:
            return False
        if R.zero not in R.add[a]:
            return False
    for a in rng:
        for b in rng:
            ab = R.add[a][b]
            mab = R.mul[a][b]
            for c in rng:
                if R.add[ab][c] != R.add[a][R.add[b][c]]:
                    return False
                if R.mul[mab][c] != R.mul[a][R.mul[b][c]]:
                    return False
                if R.mul[a][R.add[b][c]] != R.add[mab][R.mul[a][c]]:
                    return False
    return True


def _mult_order(R: RingModel, x: int) -> int:
    k, y = 1, x
    while y != R.one:
        y = R.mul[y][x]
        k += 1
        if k > R.size:
            return 0
    return k


def find_isomorphism(R: RingModel, F: Field) -> Optional[dict]:
    """A ring isomorphism F -> R as {raw element of F: element of R}, found
    by sending a generator of F* to each candidate of the same order."""
    if R.size != F.order or not is_field(R):
        return None
    els = F.elements()
    q = F.order
    g = next(x for x in els if x != F.zero and _order_in(F, x) == q - 1)
    powers = [F.one]
    for _ in range(q - 2):
        powers.append(F.mul(powers[-1], g))
    for r in range(R.size):
        if r == R.zero or _mult_order(R, r) != q - 1:
            continue
        phi = {F.zero: R.zero}
        y = R.one
        for x in powers:
            phi[x] = y
            y = R.mul[y][r]
        if all(phi[F.add(a, b)] == R.add[phi[a]][phi[b]] for a in els for b in els):
            return phi
    return None


def _order_in(F: Field, x) -> int:
    k, y = 1, x
    while y != F.one:
        y = F.mul(y, x)
        k += 1
    return k


def iso_small_field(R: RingModel, F: Field) -> bool:
    if R.size > 10 ** 4:
        raise BudgetExceeded("ring too large for the isomorphism search")
    return find_isomorphism(R, F) is not None
