"""The named formulas, transcribed as ASTs.

``1`` in the displayed group formulas is the identity ``e``.
"""

from __future__ import annotations

from typing import Optional

from ..errors import UnknownName
from .syntax import (E, Formula, Quant, and_, comm, conj, eq, exists, forall, implies,
                     mul, neq, not_, substitute, Var)


def _commutator_product(us, vs):
    return mul(*[comm(u, v) for u, v in zip(us, vs)])


def define_n(N: int) -> Formula:
    """Every product of two N-fold commutator products is an N-fold product."""
    if N < 1:
        raise ValueError("N must be positive")
    r = range(1, N + 1)
    xs, ys = [f"x{i}" for i in r], [f"y{i}" for i in r]
    zs, ts = [f"z{i}" for i in r], [f"t{i}" for i in r]
    vs, us = [f"v{i}" for i in r], [f"u{i}" for i in r]
    lhs = mul(_commutator_product(xs, ys), _commutator_product(zs, ts))
    body = eq(lhs, _commutator_product(us, vs))
    return forall(xs + ys + zs + ts, exists(vs + us, body))


def commut_n(N: int, x: str = "x") -> Formula:
    """x is a product of N commutators (free variable x)."""
    if N < 1:
        raise ValueError("N must be positive")
    r = range(1, N + 1)
    us, vs = [f"u{i}" for i in r], [f"v{i}" for i in r]
    return exists(us + vs, eq(x, _commutator_product(us, vs)))


def _sq(x):
    return mul(x, x)


def phi_a1() -> Formula:
    """One class of involutions, and commutators of an involution centralizer commute."""
    first = forall("M1 M2", implies(
        and_(eq(_sq("M1"), E), eq(_sq("M2"), E), neq("M1", E), neq("M2", E)),
        exists("X", eq(conj("X", "M1"), "M2"))))

    def c(a):
        return eq(mul(a, "M"), mul("M", a))
    second = forall("X1 X2", implies(
        exists("Y1 Y2 Z1 Z2 M", and_(
            eq(_sq("M"), E), neq("M", E), c("Y1"), c("Y2"), c("Z1"), c("Z2"),
            eq("X1", comm("Y1", "Z1")), eq("X2", comm("Y2", "Z2")))),
        eq(mul("X1", "X2"), mul("X2", "X1"))))
    return and_(first, second)


def relativize(f: Formula, member: Formula, var: str = "z") -> Formula:
    """Restrict every quantifier of f to the set defined by member(var)."""
    from .syntax import Conn, Eq
    if isinstance(f, Eq):
        return f
    if isinstance(f, Conn):
        return type(f)(f.op, tuple(relativize(a, member, var) for a in f.args))
    guard = substitute(member, {var: Var(f.var)})
    body = relativize(f.body, member, var)
    if f.kind == "forall":
        return Quant("forall", f.var, implies(guard, body))
    return Quant("exists", f.var, and_(guard, body))


def phi_a1_relativized(member: Formula, var: str = "z") -> Formula:
    return relativize(phi_a1(), member, var)


def ddiag2(M: str = "M", literal: bool = True) -> Formula:
    """The DDiag_2 formula in the free variable M.

    With literal=True the second clause keeps the displayed antecedent
    ``XM = MY and YM = MY``; literal=False reads it as ``XM = MX``."""
    def commutes(a, b):
        return eq(mul(a, b), mul(b, a))
    first_guard = eq(mul("X", M), mul(M, "Y")) if literal else commutes("X", M)
    clause2 = forall("X Y", implies(and_(first_guard, eq(mul("Y", M), mul(M, "Y"))),
                                    commutes("X", "Y")))
    clause3 = forall("N X", implies(
        and_(commutes("N", "I"), commutes("N", M), and_(commutes("X", "I"), eq(M, conj("X", "N")))),
        eq(mul(_sq("X"), M), mul(M, _sq("X")))))
    inner = exists("M1 M2", and_(commutes("M1", "I"), commutes("M2", "I"),
                                 eq(M, comm("M1", "M2")), clause2, clause3))
    return exists("I", and_(eq(_sq("I"), E), neq("I", E), inner))


def cell(M: str = "M") -> Formula:
    """M^2 != 1 and some conjugate of M commutes with M while X^2 does not."""
    xm = conj("X", M)
    return and_(neq(_sq(M), E), exists("X", and_(
        eq(mul(xm, M), mul(M, xm)),
        not_(eq(mul(_sq("X"), M), mul(M, _sq("X")))))))


BUILTINS = {
    "Define_N": lambda N=1, **_: define_n(N),
    "Commut_N": lambda N=1, var="x", **_: commut_n(N, var),
    "phi_A1": lambda **_: phi_a1(),
    "phi_A1_relativized": lambda member=None, var="z", **_: phi_a1_relativized(member, var),
    "DDiag2": lambda var="M", literal=True, **_: ddiag2(var, literal),
    "Cell": lambda var="M", **_: cell(var),
}


def builtin(name: str, params: Optional[dict] = None, **kw) -> Formula:
    params = {**(params or {}), **kw}
    if name not in BUILTINS:
        raise UnknownName(f"no builtin formula named {name!r}")
    if name == "phi_A1_relativized" and params.get("member") is None:
        raise ValueError("phi_A1_relativized needs a member formula")
    return BUILTINS[name](**params)
