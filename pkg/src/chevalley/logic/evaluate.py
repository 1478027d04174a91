"""Budgeted model checking of formulas over finite groups and rings.

The reference semantics is plain quantifier expansion (``optimize=False``).
With ``optimize=True`` the formula is first rewritten by equivalences that
hold in every nonempty structure:

* ``forall x ((exists y A) and B -> C)`` becomes ``forall x y (A and B -> C)``
  (and dually inside existential blocks);
* a bound variable with a defining conjunct ``x = t`` is replaced by ``t``;
* runs of like quantifiers become guarded blocks: assignments are built by
  backtracking, each conjunct of the guard is checked as soon as its
  variables are bound, and solution lists are cached on the values of the
  outer variables the guard mentions;
* when the variables of an unguarded block occur only inside one term, the
  block ranges over the image of that term instead.

The budget counts candidate assignments tried; exceeding it raises
``BudgetExceeded``.  A larger budget never changes a returned value.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Sequence

from ..errors import BudgetExceeded, UnknownName
from .syntax import (App, Conn, Const, Eq, Formula, Quant, Term, Var, conjuncts,
                     free_vars, fresh_name, bound_vars, sort_of, substitute, term_vars)

DEFAULT_BUDGET = 10 ** 8


# ------------------------------------------------------------- structures

class Structure:
    sort = "neutral"
    domain: list

    def const(self, name):
        raise UnknownName(name)

    def op(self, name) -> Callable:
        raise UnknownName(name)


class GroupStructure(Structure):
    """A finite group on ids 0..N-1 (from a FiniteGroupModel or tables)."""
    sort = "group"

    def __init__(self, model=None, *, table=None, inverses=None, identity=None):
        if model is not None:
            self.model = model
            n = model.order
            if n <= 1500:
                t = model.table().tolist()
                self._mul = lambda a, b, t=t: t[a][b]
            else:
                self._mul = model.mul
            inverses = [int(x) for x in model.inverses]
            identity = model.identity
        else:
            self.model = None
            self._mul = lambda a, b, t=table: t[a][b]
            n = len(table)
        self.domain = list(range(n))
        self._inv = list(inverses)
        self.identity = identity

    def const(self, name):
        if name != "e":
            raise UnknownName(f"constant {name} is not in the group language")
        return self.identity

    def op(self, name):
        if name == "*":
            return self._mul
        if name == "inv":
            return self._inv.__getitem__
        raise UnknownName(f"operation {name} is not in the group language")


class RingStructure(Structure):
    """A finite field (raw values) or a RingModel (ids) as a ring structure."""
    sort = "ring"

    def __init__(self, F):
        from ..groups import RingModel
        if isinstance(F, RingModel):
            self.domain = list(range(F.size))
            self._c = {"0": F.zero, "1": F.one}
            neg = [F.add[a].index(F.zero) for a in range(F.size)]
            self._ops = {"+": lambda a, b: F.add[a][b], "*": lambda a, b: F.mul[a][b],
                         "neg": neg.__getitem__}
        else:
            self.domain = F.elements()
            self._c = {"0": F.zero, "1": F.one}
            if F.kind == "prime":
                p = F.p
                self._ops = {"+": lambda a, b: (a + b) % p, "*": lambda a, b: (a * b) % p,
                             "neg": lambda a: (-a) % p}
            else:
                self._ops = {"+": F.add, "*": F.mul, "neg": F.neg}

    def const(self, name):
        if name not in self._c:
            raise UnknownName(f"constant {name} is not in the ring language")
        return self._c[name]

    def op(self, name):
        if name not in self._ops:
            raise UnknownName(f"operation {name} is not in the ring language")
        return self._ops[name]


class Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"evaluation budget {self.limit} exhausted")


# --------------------------------------------------------------- rewriting

@dataclass(frozen=True)
class Block:
    """kind over vars: forall -> (and guards) => body; exists -> guards and body."""
    kind: str
    vars: tuple
    guards: tuple
    body: object


def _collect(f: Formula, kind: str):
    vs = []
    while isinstance(f, Quant) and f.kind == kind:
        vs.append(f.var)
        f = f.body
    return vs, f


def _split_guard(kind: str, body: Formula):
    if kind == "forall":
        if isinstance(body, Conn) and body.op == "implies":
            return conjuncts(body.args[0]), body.args[1]
        return [], body
    parts = conjuncts(body)
    return parts[:-1], parts[-1]


def _rebuild(kind, vs, guards, body) -> Formula:
    from .syntax import and_, implies, exists as ex, forall as fa
    if kind == "forall":
        inner = implies(and_(*guards), body) if guards else body
        return fa(vs, inner) if vs else inner
    inner = and_(*guards, body) if guards else body
    return ex(vs, inner) if vs else inner


def rewrite(f: Formula) -> Formula:
    """Equivalence-preserving normalisation used by the optimised evaluator."""
    if isinstance(f, Eq):
        return f
    if isinstance(f, Conn):
        return Conn(f.op, tuple(rewrite(a) for a in f.args))
    kind = f.kind
    vs, body = _collect(f, kind)
    guards, body = _split_guard(kind, body)
    changed = True
    while changed:
        changed = False
        # pull existential blocks out of the guard
        for k, g in enumerate(guards):
            if isinstance(g, Quant) and g.kind == "exists":
                ws, inner = _collect(g, "exists")
                avoid = set(vs) | free_vars(body) | bound_vars(body)
                for h in guards:
                    avoid |= free_vars(h)
                ren, taken = {}, set(avoid) | set(ws)
                for w in ws:
                    if w in avoid:
                        new = fresh_name(w, taken)
                        taken.add(new)
                        ren[w] = Var(new)
                if ren:
                    inner = substitute(inner, ren)
                    ws = [ren[w].name if w in ren else w for w in ws]
                vs = vs + list(ws)
                guards = guards[:k] + conjuncts(inner) + guards[k + 1:]
                changed = True
                break
        if changed:
            continue
        # definitional elimination
        for k, g in enumerate(guards):
            if not isinstance(g, Eq):
                continue
            for x, t in ((g.lhs, g.rhs), (g.rhs, g.lhs)):
                if isinstance(x, Var) and x.name in vs and x.name not in term_vars(t):
                    rest = guards[:k] + guards[k + 1:]
                    if any(x.name in bound_vars(h) for h in rest + [body]):
                        continue
                    m = {x.name: t}
                    guards = [substitute(h, m) for h in rest]
                    body = substitute(body, m)
                    vs = [v for v in vs if v != x.name]
                    changed = True
                    break
            if changed:
                break
    guards = [rewrite(g) for g in guards]
    body = rewrite(body)
    if not vs:
        from .syntax import and_, implies
        if kind == "forall":
            return implies(and_(*guards), body) if guards else body
        return and_(*guards, body) if guards else body
    return Block(kind, tuple(vs), tuple(guards), body)


# -------------------------------------------------------------- compiling

class _Compiler:
    def __init__(self, S: Structure, budget: Budget, optimize: bool):
        self.S = S
        self.budget = budget
        self.optimize = optimize
        self.nslots = 0

    def slot(self):
        self.nslots += 1
        return self.nslots - 1

    # terms
    def term(self, t: Term, scope: dict):
        if isinstance(t, Var):
            if t.name not in scope:
                raise UnknownName(f"free variable {t.name} has no value")
            i = scope[t.name]
            return lambda env: env[i]
        if isinstance(t, Const):
            c = self.S.const(t.name)
            return lambda env: c
        op = self.S.op(t.op)
        if len(t.args) == 1:
            a = self.term(t.args[0], scope)
            return lambda env: op(a(env))
        a, b = (self.term(x, scope) for x in t.args)
        return lambda env: op(a(env), b(env))

    # formulas
    def formula(self, f, scope: dict):
        if isinstance(f, Eq):
            l, r = self.term(f.lhs, scope), self.term(f.rhs, scope)
            return lambda env: l(env) == r(env)
        if isinstance(f, Conn):
            parts = [self.formula(a, scope) for a in f.args]
            if f.op == "not":
                p = parts[0]
                return lambda env: not p(env)
            if f.op == "implies":
                a, b = parts
                return lambda env: (not a(env)) or b(env)
            if f.op == "and":
                return lambda env: all(p(env) for p in parts)
            return lambda env: any(p(env) for p in parts)
        if isinstance(f, Quant):
            return self.quant(f, scope)
        return self.block(f, scope)

    def quant(self, f: Quant, scope: dict):
        i = self.slot()
        body = self.formula(f.body, {**scope, f.var: i})
        dom, budget = self.S.domain, self.budget
        if f.kind == "forall":
            def run(env):
                budget.charge(len(dom))
                for x in dom:
                    env[i] = x
                    if not body(env):
                        return False
                return True
        else:
            def run(env):
                budget.charge(len(dom))
                for x in dom:
                    env[i] = x
                    if body(env):
                        return True
                return False
        return run

    def block(self, b: Block, scope: dict):
        if not b.guards:
            img = self.image_block(b, scope)
            if img is not None:
                return img
        order, placed, levels = [], set(), []
        remaining = list(b.guards)
        for g in b.guards:
            need = [v for v in b.vars if v in _free(g) and v not in placed]
            for v in need:
                order.append(v)
                placed.add(v)
                levels.append([])
            ready = [h for h in remaining if (_free(h) & set(b.vars)) <= placed]
            for h in ready:
                remaining.remove(h)
                if levels:
                    levels[-1].append(h)
                else:
                    levels.append([h])  # guard without block variables
                    order.append(None)
        for v in b.vars:
            if v not in placed:
                order.append(v)
                placed.add(v)
                levels.append([])
        slots = {}
        inner = dict(scope)
        for v in order:
            if v is not None:
                slots[v] = self.slot()
                inner[v] = slots[v]
        guard_fns = [[self.formula(h, inner) for h in lv] for lv in levels]
        body = self.formula(b.body, inner)
        outer = set()
        for g in b.guards:
            outer |= _free(g)
        outer_slots = tuple(scope[v] for v in sorted(outer - set(b.vars)))
        seq = [slots[v] if v is not None else None for v in order]
        dom, budget = self.S.domain, self.budget
        cache: dict = {}

        def solutions(env):
            key = tuple(env[s] for s in outer_slots)
            hit = cache.get(key)
            if hit is not None:
                return hit
            out = []

            def rec(k):
                if k == len(seq):
                    out.append(tuple(env[s] for s in seq if s is not None))
                    return
                s = seq[k]
                if s is None:
                    if all(g(env) for g in guard_fns[k]):
                        rec(k + 1)
                    return
                budget.charge(len(dom))
                gs = guard_fns[k]
                for x in dom:
                    env[s] = x
                    if all(g(env) for g in gs):
                        rec(k + 1)
            rec(0)
            cache[key] = out
            return out

        real = [s for s in seq if s is not None]
        if b.kind == "forall":
            def run(env):
                for sol in solutions(env):
                    for s, x in zip(real, sol):
                        env[s] = x
                    if not body(env):
                        return False
                return True
        else:
            def run(env):
                for sol in solutions(env):
                    for s, x in zip(real, sol):
                        env[s] = x
                    if body(env):
                        return True
                return False
        return run

    # image rule
    def image_block(self, b: Block, scope: dict):
        V = set(b.vars)
        if _bound(b.body) & V:
            return None
        sides = []
        if not _touching_sides(b.body, V, sides):
            return None
        if not sides:
            return None
        tau = sides[0]
        if any(s != tau for s in sides[1:]):
            return None
        if term_vars(tau) - V - set(scope):
            # tau mentions a variable bound further inside the body
            return None
        w = fresh_name("w", V | set(scope) | _all_names(b.body))
        body_f = _replace_term(b.body, tau, Var(w))
        i = self.slot()
        body = self.formula(body_f, {**scope, w: i})
        img = self.image_fn(tau, V, scope)
        if b.kind == "forall":
            def run(env):
                for x in img(env):
                    env[i] = x
                    if not body(env):
                        return False
                return True
        else:
            def run(env):
                for x in img(env):
                    env[i] = x
                    if body(env):
                        return True
                return False
        return run

    def image_fn(self, t: Term, V: set, scope: dict):
        own = term_vars(t) & V
        dom, budget = self.S.domain, self.budget
        if not own:
            f = self.term(t, scope)
            return lambda env: (f(env),)
        if isinstance(t, Var):
            return lambda env: dom
        outer_slots = tuple(scope[v] for v in sorted(term_vars(t) - V))
        cache: dict = {}
        if isinstance(t, App) and t.op in ("*", "+") and not (
                term_vars(t.args[0]) & term_vars(t.args[1]) & V):
            fa, fb = self.image_fn(t.args[0], V, scope), self.image_fn(t.args[1], V, scope)
            op = self.S.op(t.op)

            def img(env):
                key = tuple(env[s] for s in outer_slots)
                if key not in cache:
                    A, B = fa(env), fb(env)
                    budget.charge(len(A) * len(B))
                    cache[key] = sorted({op(x, y) for x in A for y in B}, key=_order_key)
                return cache[key]
            return img
        if isinstance(t, App) and len(t.args) == 1:
            fa = self.image_fn(t.args[0], V, scope)
            op = self.S.op(t.op)

            def img(env):
                key = tuple(env[s] for s in outer_slots)
                if key not in cache:
                    cache[key] = sorted({op(x) for x in fa(env)}, key=_order_key)
                return cache[key]
            return img
        names = sorted(own)
        base = self.nslots
        slots = {v: self.slot() for v in names}
        f = self.term(t, {**scope, **slots})
        sl = [slots[v] for v in names]

        def img(env):
            key = tuple(env[s] for s in outer_slots)
            if key not in cache:
                budget.charge(len(dom) ** len(sl))
                vals = set()
                for xs in product(dom, repeat=len(sl)):
                    for s, x in zip(sl, xs):
                        env[s] = x
                    vals.add(f(env))
                cache[key] = sorted(vals, key=_order_key)
            return cache[key]
        del base
        return img


def _order_key(x):
    return (str(type(x)), x)


def _free(f) -> set:
    if isinstance(f, Block):
        out = _free(f.body)
        for g in f.guards:
            out |= _free(g)
        return out - set(f.vars)
    if isinstance(f, Eq):
        return term_vars(f.lhs) | term_vars(f.rhs)
    if isinstance(f, Quant):
        return _free(f.body) - {f.var}
    out = set()
    for a in f.args:
        out |= _free(a)
    return out


def _bound(f) -> set:
    if isinstance(f, Block):
        out = set(f.vars) | _bound(f.body)
        for g in f.guards:
            out |= _bound(g)
        return out
    if isinstance(f, Eq):
        return set()
    if isinstance(f, Quant):
        return {f.var} | _bound(f.body)
    out = set()
    for a in f.args:
        out |= _bound(a)
    return out


def _all_names(f) -> set:
    if isinstance(f, Block):
        out = set(f.vars) | _all_names(f.body)
        for g in f.guards:
            out |= _all_names(g)
        return out
    return _free(f) | _bound(f)


def _touching_sides(f, V: set, acc: list) -> bool:
    """Collect equation sides mentioning V; False if the shape is unsupported."""
    if isinstance(f, Eq):
        for s in (f.lhs, f.rhs):
            if term_vars(s) & V:
                acc.append(s)
        return True
    if isinstance(f, Conn):
        return all(_touching_sides(a, V, acc) for a in f.args)
    if isinstance(f, Quant):
        return f.var not in V and _touching_sides(f.body, V, acc)
    if isinstance(f, Block):
        if set(f.vars) & V:
            return False
        return all(_touching_sides(g, V, acc) for g in f.guards) and \
            _touching_sides(f.body, V, acc)
    return False


def _replace_term(f, tau: Term, w: Var):
    if isinstance(f, Eq):
        return Eq(w if f.lhs == tau else f.lhs, w if f.rhs == tau else f.rhs)
    if isinstance(f, Conn):
        return Conn(f.op, tuple(_replace_term(a, tau, w) for a in f.args))
    if isinstance(f, Quant):
        return Quant(f.kind, f.var, _replace_term(f.body, tau, w))
    return Block(f.kind, f.vars, tuple(_replace_term(g, tau, w) for g in f.guards),
                 _replace_term(f.body, tau, w))


# ------------------------------------------------------------ entry points

def evaluate(f: Formula, S: Structure, assignment: Optional[dict] = None,
             budget: int = DEFAULT_BUDGET, optimize: bool = True) -> bool:
    assignment = assignment or {}
    missing = free_vars(f) - set(assignment)
    if missing:
        raise UnknownName(f"free variables without values: {sorted(missing)}")
    srt = sort_of(f)
    if srt != "neutral" and S.sort != srt:
        raise UnknownName(f"{srt} formula evaluated in a {S.sort} structure")
    c = _Compiler(S, Budget(budget), optimize)
    scope = {}
    for v in sorted(assignment):
        scope[v] = c.slot()
    g = rewrite(f) if optimize else f
    run = c.formula(g, scope)
    env = [None] * max(c.nslots, 1)
    for v, s in scope.items():
        env[s] = assignment[v]
    return bool(run(env))


def definable_set(f: Formula, S: Structure, var: str, assignment: Optional[dict] = None,
                  budget: int = DEFAULT_BUDGET, optimize: bool = True) -> list:
    """Elements x with S |= f[x/var], in domain order."""
    assignment = dict(assignment or {})
    missing = free_vars(f) - set(assignment) - {var}
    if missing:
        raise UnknownName(f"free variables without values: {sorted(missing)}")
    c = _Compiler(S, Budget(budget), optimize)
    scope = {v: c.slot() for v in sorted(set(assignment) | {var})}
    g = rewrite(f) if optimize else f
    run = c.formula(g, scope)
    env = [None] * max(c.nslots, 1)
    for v, s in scope.items():
        if v != var:
            env[s] = assignment[v]
    out = []
    for x in S.domain:
        env[scope[var]] = x
        if run(env):
            out.append(x)
    return out


def eval_group(f: Formula, G, budget: int = DEFAULT_BUDGET, optimize: bool = True,
               assignment: Optional[dict] = None) -> bool:
    S = G if isinstance(G, GroupStructure) else GroupStructure(G)
    return evaluate(f, S, assignment, budget, optimize)


def eval_ring(f: Formula, F, budget: int = DEFAULT_BUDGET, optimize: bool = True,
              assignment: Optional[dict] = None) -> bool:
    S = F if isinstance(F, RingStructure) else RingStructure(F)
    return evaluate(f, S, assignment, budget, optimize)
