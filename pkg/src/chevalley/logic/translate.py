"""Translation of group sentences about a matrix group G(R) into ring
sentences about R.

Each group variable g becomes n^2 ring variables ``g_ij``; quantifiers are
guarded by the defining polynomial equations of G; an equation of group
terms becomes the conjunction of its n^2 entry equations, and products
expand to sums of entry products.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .syntax import (App, Conn, Const, Eq, Formula, ONE, Quant, Term, Var, ZERO, and_,
                     exists, forall, implies, subst_term, term_vars)

PLACEHOLDER = "a"


def entry_name(g: str, i: int, j: int) -> str:
    return f"{g}_{i + 1}{j + 1}"


@dataclass(frozen=True)
class RingTranslation:
    """n and the defining equations of G, written over placeholder variables
    ``a_ij`` (1-based).  ``inverse`` is "adjugate" (valid when det = 1 is a
    defining equation) or "witness" (an existential witness W with W*X = E)."""
    n: int
    defining_polys: tuple
    inverse: str = "adjugate"
    name: str = ""

    def polys_for(self, g: str) -> list:
        m = {entry_name(PLACEHOLDER, i, j): Var(entry_name(g, i, j))
             for i in range(self.n) for j in range(self.n)}
        return [Eq(subst_term(p.lhs, m), subst_term(p.rhs, m)) for p in self.defining_polys]


def _sum(terms):
    terms = list(terms)
    out = terms[0]
    for t in terms[1:]:
        out = App("+", (out, t))
    return out


def _prod(terms):
    terms = list(terms)
    out = terms[0]
    for t in terms[1:]:
        out = App("*", (out, t))
    return out


def _sign(p) -> int:
    s, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def det_term(mat) -> Term:
    """Leibniz expansion of the determinant of a matrix of ring terms."""
    n = len(mat)
    if n == 0:
        return ONE
    parts = []
    for p in permutations(range(n)):
        t = _prod(mat[i][p[i]] for i in range(n))
        parts.append(t if _sign(p) > 0 else App("neg", (t,)))
    return _sum(parts)


def sl(n: int) -> RingTranslation:
    a = [[Var(entry_name(PLACEHOLDER, i, j)) for j in range(n)] for i in range(n)]
    return RingTranslation(n, (Eq(det_term(a), ONE),), "adjugate", f"SL_{n}")


def _identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _matmul(A, B):
    n = len(A)
    return [[_sum(App("*", (A[i][k], B[k][j])) for k in range(n)) for j in range(n)]
            for i in range(n)]


def _adjugate(A):
    n = len(A)
    if n == 1:
        return [[ONE]]
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[A[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            d = det_term(minor)
            out[j][i] = d if (i + j) % 2 == 0 else App("neg", (d,))
    return out


class _Translator:
    def __init__(self, T: RingTranslation):
        self.T = T
        self.witnesses = 0

    def matrix(self, t: Term, pending: list):
        n = self.T.n
        if isinstance(t, Var):
            return [[Var(entry_name(t.name, i, j)) for j in range(n)] for i in range(n)]
        if isinstance(t, Const):
            return _identity(n)
        if t.op == "*":
            return _matmul(self.matrix(t.args[0], pending), self.matrix(t.args[1], pending))
        inner = self.matrix(t.args[0], pending)
        if self.T.inverse == "adjugate":
            return _adjugate(inner)
        self.witnesses += 1
        w = f"W{self.witnesses}"
        W = [[Var(entry_name(w, i, j)) for j in range(n)] for i in range(n)]
        pending.append((w, W, inner))
        return W

    def formula(self, f: Formula) -> Formula:
        n = self.T.n
        if isinstance(f, Eq):
            pending: list = []
            L, R = self.matrix(f.lhs, pending), self.matrix(f.rhs, pending)
            atom = and_(*[Eq(L[i][j], R[i][j]) for i in range(n) for j in range(n)])
            for w, W, X in reversed(pending):
                P, I = _matmul(W, X), _identity(n)
                eqs = [Eq(P[i][j], I[i][j]) for i in range(n) for j in range(n)]
                names = [entry_name(w, i, j) for i in range(n) for j in range(n)]
                atom = exists(names, and_(*eqs, atom))
            return atom
        if isinstance(f, Conn):
            return Conn(f.op, tuple(self.formula(a) for a in f.args))
        names = [entry_name(f.var, i, j) for i in range(n) for j in range(n)]
        guard = and_(*self.T.polys_for(f.var)) if self.T.defining_polys else None
        body = self.formula(f.body)
        if f.kind == "forall":
            return forall(names, implies(guard, body) if guard else body)
        return exists(names, and_(guard, body) if guard else body)


def translate(f: Formula, T: RingTranslation) -> Formula:
    return _Translator(T).formula(f)
