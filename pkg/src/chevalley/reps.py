"""Matrix models of elementary Chevalley groups.

``representation`` builds the standard representation of a classical Lie
algebra (SL, Sp, SO) or the 7-dimensional representation of G2, as a map
from roots to integral nilpotent matrices.  Group elements x_a(t), w_a(t),
h_a(t) are computed from these; relations R1-R6 and structure constants are
checked by direct matrix computation.

The classical root vectors are recovered from the invariant form: for each
root the root space is the null space of X^T Q + Q X = 0 restricted to the
matrix positions of the right weight.  The G2 matrices come from a printed
table which is treated as untrusted; see ``g2_structure``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (CharThreeForbiddenForG2, CharTwoForbidden, ChevalleyError,
                     ExtractionInconsistent, NeedsImaginaryUnit, NotInvertible,
                     SubgroupBudgetExceeded, UnsupportedFamily)
from .fields import Field, FieldElement, make_field
from .matrices import Matrix, elementary, nullspace
from .roots import Root, RootSystem, build, pairing, reflect

QQ = make_field("rationals")
QI = make_field("gaussian_rationals")

VARIANTS = {
    "A": "special_linear",
    "C": "symplectic",
    "B": "odd_orthogonal",
    "D": "even_orthogonal",
    "G": "g2_dim7",
}


class InvalidRepresentation(ChevalleyError, RuntimeError):
    pass


# ------------------------------------------------------------------ helpers

def _weight_of(phi: RootSystem, v) -> Root:
    return v if isinstance(v, Root) else Root(tuple(v))


def _pair(mu: Root, alpha: Root) -> int:
    if not any(mu.coords):
        return 0
    return pairing(mu, alpha)


def _primitive(vec: Sequence[Fraction]) -> list:
    """Smallest integer multiple with first nonzero entry positive."""
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return ints if first > 0 else [-x for x in ints]


def _to_field(target: Field, base: Field):
    """Raw-value map from Q or Q(i) into the target field."""
    if base == QQ:
        return target.convert
    if target == QI:
        return lambda a: a
    i = target.i_unit()

    def conv(a):
        re_, im = target.convert(a[0]), target.convert(a[1])
        if im == target.zero:
            return re_
        if i is None:
            raise NeedsImaginaryUnit(f"{target} has no square root of -1")
        return target.add(re_, target.mul(im, i))
    return conv


# ---------------------------------------------------------- classical models

def _classical_weights(t: str, l: int) -> list:
    if t == "A":
        n = l + 1
        return [tuple(2 if k == i else 0 for k in range(n)) for i in range(n)]
    pos = [tuple(2 if k == i else 0 for k in range(l)) for i in range(l)]
    neg = [tuple(-x for x in v) for v in reversed(pos)]
    if t == "B":
        return pos + [tuple(0 for _ in range(l))] + neg
    return pos + neg


def _classical_form(t: str, l: int) -> Optional[list]:
    if t == "A":
        return None
    n = 2 * l + 1 if t == "B" else 2 * l
    q = [[0] * n for _ in range(n)]
    for k in range(n):
        if t == "C":
            q[k][n - 1 - k] = 1 if k < l else -1
        else:
            q[k][n - 1 - k] = 1
    if t == "B":
        q[l][l] = 2          # keeps the divided powers of short-root vectors integral
    return q


def _root_space(weights, form, alpha: Root) -> list:
    """Rational basis of the alpha root space as {(p, q): Fraction} dicts."""
    n = len(weights)
    pos = [(p, q) for p in range(n) for q in range(n)
           if tuple(a - b for a, b in zip(weights[p], weights[q])) == alpha.coords]
    if form is None:
        return [{pq: Fraction(1)} for pq in pos]
    # X^T Q + Q X = 0, one equation per matrix entry (i, j)
    eqs = []
    for i in range(n):
        for j in range(n):
            row = []
            for (p, q) in pos:
                c = 0
                if q == i:
                    c += form[p][j]      # (X^T Q)_{ij} = sum_k X_{ki} Q_{kj}
                if q == j:
                    c += form[i][p]      # (Q X)_{ij} = sum_k Q_{ik} X_{kj}
                row.append(Fraction(c))
            if any(row):
                eqs.append(row)
    if not eqs:
        return [{pq: Fraction(1)} for pq in pos]
    basis = nullspace(QQ, eqs)
    return [{pq: v for pq, v in zip(pos, vec) if v} for vec in basis]


def _classical_nilpotents(phi: RootSystem):
    t, l = phi.type_label, phi.rank
    weights = _classical_weights(t, l)
    form = _classical_form(t, l)
    n = len(weights)
    out = {}
    for alpha in phi.positive:
        sp_p = _root_space(weights, form, alpha)
        sp_n = _root_space(weights, form, -alpha)
        if len(sp_p) != 1 or len(sp_n) != 1:
            raise InvalidRepresentation(f"root space of {alpha} is not one-dimensional")
        keys = sorted(sp_p[0])
        x = dict(zip(keys, _primitive([sp_p[0][k] for k in keys])))
        keys = sorted(sp_n[0])
        y = dict(zip(keys, _primitive([sp_n[0][k] for k in keys])))
        X = elementary(QQ, n, {k: Fraction(v) for k, v in x.items()})
        Y = elementary(QQ, n, {k: Fraction(v) for k, v in y.items()})
        # scale Y so that [[X, Y], X] = 2X
        T = X.bracket(Y).bracket(X)
        p, q = X.support()[0]
        c = 2 * X.rows[p][q] / T.rows[p][q]
        out[alpha] = X
        out[-alpha] = Y.scale(c)
    formm = None if form is None else Matrix.from_values(QQ, form)
    return [Root(w) for w in weights], out, formm


# ------------------------------------------------------------------ G2 data

# Images of the twelve root vectors, as printed.  Index k stands for the
# root G2_COEFFS[k] (negative k for its negative).
G2_PRINTED = {
    1: "-ie_{13}+2ie_{21}+ie_{46}-ie_{75}",
    -1: "-ie_{12}+2ie_{31}-ie_{57}+ie_{64}",
    2: "e_{37}-e_{62}",
    -2: "-e_{26}+e_{73}",
    3: "ie_{17}-ie_{35}+ie_{42}-2ie_{61}",
    -3: "-ie_{16}-ie_{24}+ie_{53}+2ie_{71}",
    4: "-ie_{15}+i2_{27}+2ie_{41}-ie_{63}",
    -4: "-ie_{14}-ie_{36}+2ie_{51}+ie_{72}",
    5: "-e_{27}+e_{43}",
    -5: "e_{34}-e_{72}",
    6: "-e_{47}+e_{65}",
    -6: "e_{56}-e_{74}",
}

G2_PRINTED_W = {
    1: "-e_{11}+t^2e_{23}+t^{-2}e_{32}+ite_{46}-it^{-1}e_{57}+it^{-1}e_{64}-ite_{75}",
    2: "e_{11}+t^{-1}e_{26}+t3_{37}+e_{44}+e_{55}-te_{62}-t^{-1}e_{73}",
    3: "-e_{11}-it^{-1}e_{24}+ite_{35}-ite_{42}+it^{-1}e_{53}+t^2 e_{67}+t^{-2} e_{76}",
    4: "-e_{11}-ite_{27}+it^{-1}e_{36}+t^2 e_{45} +t^{-2} e_{54} +it e_{63}-it^{-1}e_{72}",
    5: "e_{11}-te_{25}-t^{-1}e_{34}+te_{43}+t^{-1}e_{52}+e_{66}+e_{77}",
    6: "e_{11}+e_{22}+e_{33}-te_{47}-t^{-1}e_{56}+te_{65}+t^{-1}e_{74}",
}

G2_PRINTED_H = {
    1: "[1,t^2,1/t^2,t,1/t,1/t,t]",
    2: "[1,1/t,t,1,1,t,1/t]",
    3: "[1,1/t,t,1/t,t,t^2,1/t^2]",
    4: "[1,t,1/t,t^2,1/t^2,t,1/t]",
    5: "[1,t,1/t,t,1/t,1,1]",
    6: "[1,1,1,t,1/t,t,1/t]",
}

G2_PRINTED_WEYL = {
    (1, 2): "-e_{11}+e_{27}-e_{36}-ie_{42}+ie_{53}+ie_{64}-ie_{75}",
    (1, 3): "e_{11}+ie_{25}-ie_{34}+ie_{47}-ie_{56}+e_{62}+e_{73}",
    (1, 4): "e_{11}+ie_{26}-ie_{37}-e_{43}-e_{52}+ie_{65}-ie_{74}",
    (1, 5): "-e_{11}-e_{24}-e_{35}-ie_{46}+ie_{57}-ie_{63}+ie_{72}",
    (1, 6): "-e_{11}+e_{23}+e_{32}-ie_{45}+ie_{54}+ie_{67}-ie_{76}",
}

G2_H_INVOLUTIONS = ((1, 1, 1, -1, -1, -1, -1), (1, -1, -1, -1, -1, 1, 1),
                    (1, -1, -1, 1, 1, -1, -1))

# root a_k = G2_COEFFS[k-1] in terms of (a_1, a_2); a_1 short
G2_COEFFS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))

_TERM = re.compile(r"^(\d*)(i?)(?:t(?:\^\{?(-?\d+)\}?)?)?e_\{(\d)(\d)\}$")


@dataclass(frozen=True)
class PrintedTerm:
    position: tuple       # 0-based (row, column)
    value: tuple          # Gaussian raw value
    t_power: int


def parse_printed(text: str):
    """Split a printed sum of matrix units into terms.

    Returns (terms, malformed) where malformed lists the chunks that do not
    parse, each with the position it seems to refer to (or None)."""
    s = text.replace(" ", "")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    terms, bad = [], []
    for ch in chunks:
        sign = -1 if ch[0] == "-" else 1
        body = ch.lstrip("+-")
        m = _TERM.match(body)
        if not m:
            pos = re.search(r"_\{(\d)(\d)\}", body)
            bad.append((ch, None if pos is None else (int(pos[1]) - 1, int(pos[2]) - 1)))
            continue
        coef = int(m[1]) if m[1] else 1
        val = (Fraction(0), Fraction(sign * coef)) if m[2] else (Fraction(sign * coef), Fraction(0))
        tp = 0
        if "t" in body:
            tp = int(m[3]) if m[3] else 1
        terms.append(PrintedTerm((int(m[4]) - 1, int(m[5]) - 1), val, tp))
    return terms, bad


def parse_printed_h(text: str) -> tuple:
    out = []
    for tok in text.strip("[] ").split(","):
        tok = tok.strip()
        if tok == "1":
            out.append(0)
        else:
            m = re.fullmatch(r"(1/)?t(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"cannot read torus entry {tok!r}")
            k = int(m[2]) if m[2] else 1
            out.append(-k if m[1] else k)
    return tuple(out)


def _g2_roots(phi: RootSystem) -> dict:
    out = {}
    for k, c in enumerate(G2_COEFFS, start=1):
        r = phi.root_from_coefficients(c)
        out[k], out[-k] = r, -r
    return out


def g2_weights(phi: RootSystem) -> list:
    """Weights of the basis e_1..e_7: 0, a1, -a1, a4, -a4, a3, -a3."""
    R = _g2_roots(phi)
    zero = Root(tuple(0 for _ in R[1].coords))
    return [zero, R[1], R[-1], R[4], R[-4], R[3], R[-3]]


def _printed_matrix(terms) -> dict:
    return {t.position: t.value for t in terms}


def _sparse(M: Matrix) -> dict:
    return {pq: M.rows[pq[0]][pq[1]] for pq in M.support()}


def _diff(printed: dict, M: Matrix) -> list:
    got = _sparse(M)
    return sorted(pq for pq in set(printed) | set(got)
                  if printed.get(pq, QI.zero) != got.get(pq, QI.zero))


def _sign_variants(entries: dict):
    keys = sorted(entries)
    for signs in itertools.product((1, -1), repeat=len(keys)):
        flips = sum(s < 0 for s in signs)
        yield flips, elementary(QI, 7, {k: entries[k] if s > 0 else QI.neg(entries[k])
                                         for k, s in zip(keys, signs)})


@dataclass(frozen=True)
class Correction:
    matrix: int            # k for X_k, negative for X_{-k}
    position: tuple        # 1-based (row, column)
    printed: Optional[str]
    corrected: Optional[str]
    reason: str


@dataclass
class G2Structure:
    weights: list
    roots: dict                   # k -> Root
    matrices: dict                # k -> Matrix over Q(i)
    corrections: list
    malformed: dict               # k -> list of malformed chunks
    candidates_tried: int
    score: tuple


def _derive_exp(M: Matrix, t, f: Field = QI) -> Matrix:
    out = Matrix.identity(f, M.n)
    term = out
    for k in range(1, M.n + 1):
        term = (term * M).scale(f.mul(t, f.inv(f.from_int(k))))
        if term.is_zero():
            break
        out = out + term
    return out


def _w_at(X: dict, k: int, t) -> Matrix:
    f = QI
    return _derive_exp(X[k], t) * _derive_exp(X[-k], f.neg(f.inv(t))) * _derive_exp(X[k], t)


def _printed_w(text: str, t) -> tuple:
    terms, bad = parse_printed(text)
    rows = [[QI.zero] * 7 for _ in range(7)]
    for term in terms:
        p, q = term.position
        rows[p][q] = QI.add(rows[p][q], QI.mul(term.value, QI.power(t, term.t_power)))
    return Matrix(QI, rows), [b[1] for b in bad if b[1] is not None]


def _w_mismatches(X: dict) -> int:
    count = 0
    for t in ((Fraction(2), Fraction(0)), (Fraction(3), Fraction(0))):
        for k, text in G2_PRINTED_W.items():
            P, unknown = _printed_w(text, t)
            W = _w_at(X, k, t)
            count += sum(1 for pq in _diff(_sparse(P), W) if pq not in unknown)
    return count


# X_g is derived as [X_a, X_b] / n; n = r + 1 for the a-string through b
_G2_CHAIN = ((3, 1, 2, 1), (4, 1, 3, 2), (5, 1, 4, 3), (6, 2, 5, 1))


def _fmt_gauss(v) -> str:
    return QI.fmt(v)


@lru_cache(maxsize=None)
def g2_structure() -> G2Structure:
    """Validate the printed G2 table and repair it.

    The simple root vectors X_{+-1}, X_{+-2} are re-signed entrywise until
    [X_a, X_-a] is the coroot diagonal and [X_1, X_-2] = [X_2, X_-1] = 0.
    The other eight matrices are then forced up to sign by brackets with
    integral structure constants; each sign is chosen to agree with the
    printed matrix as far as possible.  Among all candidates the one with
    fewest changed entries wins, ties broken by agreement with the printed
    w_k(t)."""
    phi = build("G", 2)
    R = _g2_roots(phi)
    weights = g2_weights(phi)
    printed, malformed = {}, {}
    for k, text in G2_PRINTED.items():
        terms, bad = parse_printed(text)
        printed[k] = _printed_matrix(terms)
        malformed[k] = bad
    h_target = {}
    for a in (1, 2):
        diag = [QI.from_int(_pair(mu, R[a])) for mu in weights]
        h_target[a] = Matrix.diagonal_matrix(QI, diag)

    def well_placed(k):
        out = {}
        for (p, q), v in printed[k].items():
            if (weights[p] - weights[q]) == R[k]:
                out[(p, q)] = v
        return out

    pairs = {}
    for a in (1, 2):
        pairs[a] = []
        for fa, A in _sign_variants(well_placed(a)):
            for fb, B in _sign_variants(well_placed(-a)):
                h = A.bracket(B)
                if h == h_target[a] and h.bracket(A) == A.scale(QI.from_int(2)):
                    pairs[a].append((fa + fb, A, B))
    candidates = []
    tried = 0
    for f1, X1, Xm1 in pairs[1]:
        for f2, X2, Xm2 in pairs[2]:
            tried += 1
            if not (X1.bracket(Xm2).is_zero() and X2.bracket(Xm1).is_zero()):
                continue
            X = {1: X1, -1: Xm1, 2: X2, -2: Xm2}
            changes = sum(len(_diff(printed[k], X[k])) for k in X)
            for g, a, b, nab in _G2_CHAIN:
                D = X[a].bracket(X[b]).scale(QI.inv(QI.from_int(nab)))
                E = X[-a].bracket(X[-b])
                T = D.bracket(E).bracket(D)
                p, q = D.support()[0]
                c = QI.mul(QI.mul(QI.from_int(2), D.rows[p][q]), QI.inv(T.rows[p][q]))
                E = E.scale(c)
                best = None
                for s in (1, -1):
                    P = D if s > 0 else -D
                    M = E if s > 0 else -E
                    ch = len(_diff(printed[g], P)) + len(_diff(printed[-g], M))
                    if best is None or ch < best[0]:
                        best = (ch, P, M)
                changes += best[0]
                X[g], X[-g] = best[1], best[2]
            candidates.append((changes, X))
    if not candidates:
        raise InvalidRepresentation("no sign pattern of the simple root vectors is consistent")
    low = min(c for c, _ in candidates)
    finalists = [(c, _w_mismatches(X), i, X) for i, (c, X) in enumerate(candidates) if c == low]
    finalists.sort(key=lambda r: (r[0], r[1], r[2]))
    changes, wmis, _, X = finalists[0]
    corrections = []
    for k in sorted(X, key=lambda k: (abs(k), -k)):
        bad_pos = {pq: ch for ch, pq in malformed[k] if pq is not None}
        got = _sparse(X[k])
        for pq in _diff(printed[k], X[k]):
            old, new = printed[k].get(pq), got.get(pq)
            if pq in bad_pos:
                reason = f"malformed token {bad_pos[pq]!r}"
            elif old is not None and (weights[pq[0]] - weights[pq[1]]) != R[k]:
                reason = "printed position has the wrong weight"
            elif old is None:
                reason = "entry missing from the printed matrix"
            elif new is None:
                reason = "entry at a position of the wrong weight"
            elif new == QI.neg(old):
                reason = "sign"
            elif new in (QI.mul(old, (Fraction(0), Fraction(1))), QI.mul(old, (Fraction(0), Fraction(-1)))):
                reason = "phase: a factor of i breaks integrality of the structure constants"
            else:
                reason = "value"
            corrections.append(Correction(k, (pq[0] + 1, pq[1] + 1),
                                          None if old is None else _fmt_gauss(old),
                                          None if new is None else _fmt_gauss(new), reason))
    return G2Structure(weights, R, X, corrections, malformed, tried, (changes, wmis))


# ------------------------------------------------------- MatrixRep and group

@dataclass(frozen=True, eq=False)
class MatrixRep:
    system: RootSystem
    variant: str
    field: Field
    n: int
    weights: tuple                 # Root-valued weight of each basis vector
    integral: dict                 # Root -> Matrix over Q or Q(i)
    nilpotents: dict               # Root -> Matrix over field
    divided: dict = dc_field(repr=False)   # Root -> list of N^k/k! over field
    form: Optional[Matrix] = None  # over field
    base_field: Field = QQ
    corrections: tuple = ()

    @property
    def roots(self) -> tuple:
        return self.system.roots

    def identity(self) -> "GroupElement":
        return GroupElement(self, Matrix.identity(self.field, self.n))

    def over(self, field: Field) -> "MatrixRep":
        return representation(self.system, self.variant, field)

    def __repr__(self):
        return f"MatrixRep({self.system.label}, {self.variant}, {self.field!r})"


@dataclass(frozen=True)
class GroupElement:
    rep: MatrixRep = dc_field(compare=False, hash=False, repr=False)
    matrix: Matrix
    projective: bool = False

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.rep, self.matrix * other.matrix, self.projective)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.rep, self.matrix.inverse(), self.projective)

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self.rep, self.matrix ** k, self.projective)

    def is_identity(self) -> bool:
        if self.projective:
            return self.matrix.is_scalar() and self.canonical().matrix.is_identity()
        return self.matrix.is_identity()

    def center_scalars(self) -> list:
        f = self.rep.field
        if self.rep.variant == "special_linear":
            n = self.rep.n
        elif self.rep.variant in ("symplectic", "even_orthogonal"):
            n = 2
        else:
            return [f.one]
        if f.is_finite:
            return [x for x in f.elements() if x != f.zero and f.power(x, n) == f.one]
        cands = [f.one, f.neg(f.one)]
        i = f.i_unit()
        if i is not None:
            cands += [i, f.neg(i)]
        return [x for x in cands if f.power(x, n) == f.one]

    def canonical(self) -> "GroupElement":
        """Least representative modulo central scalars (idempotent)."""
        if not self.projective:
            return self
        f = self.rep.field
        key = (lambda a: f.code(a)) if f.is_finite else (lambda a: repr(a))
        best = min((self.matrix.scale(c) for c in self.center_scalars()),
                   key=lambda m: [key(a) for r in m.rows for a in r])
        return GroupElement(self.rep, best, True)

    def same(self, other: "GroupElement") -> bool:
        if self.projective or other.projective:
            return self.canonical().matrix == other.canonical().matrix
        return self.matrix == other.matrix


def _build_divided(nil: dict, base: Field, target: Field) -> dict:
    conv = _to_field(target, base)
    out = {}
    for r, N in nil.items():
        powers = [Matrix.identity(base, N.n)]
        P = N
        k = 1
        while not P.is_zero():
            powers.append(P.scale(base.inv(base.from_int(factorial(k)))))
            P = P * N
            k += 1
            if k > N.n + 1:
                raise InvalidRepresentation(f"x_{r} is not nilpotent")
        out[r] = [M.map(target, conv) for M in powers]
    return out


@lru_cache(maxsize=None)
def _integral_data(label: str, variant: str):
    phi = build(label)
    if variant == "g2_dim7":
        st = g2_structure()
        nil = {st.roots[k]: M for k, M in st.matrices.items()}
        return phi, tuple(st.weights), nil, None, QI, tuple(st.corrections)
    weights, nil, form = _classical_nilpotents(phi)
    return phi, tuple(weights), nil, form, QQ, ()


@lru_cache(maxsize=None)
def _representation(label: str, variant: str, fld: Field) -> MatrixRep:
    phi, weights, nil, form, base, corr = _integral_data(label, variant)
    conv = _to_field(fld, base)
    rep = MatrixRep(
        system=phi, variant=variant, field=fld, n=len(weights), weights=weights,
        integral=nil,
        nilpotents={r: M.map(fld, conv) for r, M in nil.items()},
        divided=_build_divided(nil, base, fld),
        form=None if form is None else form.map(fld, conv),
        base_field=base, corrections=corr)
    report = chevalley_report(rep)
    if not report["ok"]:
        raise InvalidRepresentation(f"{rep}: {report['failures'][:3]}")
    return rep


def representation(phi: RootSystem, variant: Optional[str] = None,
                   fld: Optional[Field] = None) -> MatrixRep:
    """Matrix model of the Lie algebra of phi over fld (default Q, or Q(i) for G2)."""
    expected = VARIANTS.get(phi.type_label)
    if variant is None:
        variant = expected
    if expected is None or variant != expected:
        raise UnsupportedFamily(f"no {variant} model for {phi.label}")
    if fld is None:
        fld = QI if variant == "g2_dim7" else QQ
    if fld.characteristic == 2:
        raise CharTwoForbidden("characteristic 2 is excluded")
    if variant == "g2_dim7":
        if fld.characteristic == 3:
            raise CharThreeForbiddenForG2("the G2 model needs characteristic != 3")
        if fld.i_unit() is None:
            raise NeedsImaginaryUnit(f"the 7-dimensional G2 model needs i in {fld}")
    return _representation(phi.label, variant, fld)


def chevalley_report(rep: MatrixRep) -> dict:
    """Check nilpotency, form invariance and Chevalley-basis properties 1-6
    (stated for the Lie algebra spanned by the nilpotents and coroots)."""
    phi, f = rep.system, rep.field
    X = rep.nilpotents
    fails = []
    simple = phi.simple
    h = {}
    for a in phi.roots:
        h[a] = X[a].bracket(X[-a])
    hs = [h[a] for a in simple]
    # property 1: linear independence of {h_i, x_a}
    vecs = [[x for r in M.rows for x in r] for M in hs + [X[a] for a in phi.roots]]
    if len(nullspace(f, [list(c) for c in zip(*vecs)])) != 0:
        fails.append(("1", "basis elements are linearly dependent"))
    # property 2
    for A, B in itertools.combinations(hs, 2):
        if not A.bracket(B).is_zero():
            fails.append(("2", "Cartan elements do not commute"))
    for a in phi.roots:
        N = X[a]
        if not (N ** rep.n).is_zero():
            fails.append(("nilpotent", a))
        if rep.form is not None:
            Q = rep.form
            if not (N.transpose() * Q + Q * N).is_zero():
                fails.append(("form", a))
        # property 3
        for i, s in enumerate(simple):
            if hs[i].bracket(N) != N.scale(f.from_int(pairing(a, s))):
                fails.append(("3", a, i + 1))
        # property 4: h_a is diagonal with entries <mu, a^v>, an integer
        # combination of the h_i
        want = Matrix.diagonal_matrix(f, [f.from_int(_pair(mu, a)) for mu in rep.weights])
        if h[a] != want:
            fails.append(("4", a))
    index = set(phi.roots)
    for a in phi.roots:
        for b in phi.roots:
            if a == b or a == -b:
                continue
            C = X[a].bracket(X[b])
            s = a + b
            if s in index:
                # property 5: integer N with |N| = r + 1
                r = 0
                while (b - a.scale(r + 1)) in index:
                    r += 1
                ok = any(C == X[s].scale(f.from_int(sg * (r + 1))) for sg in (1, -1))
                if not ok:
                    fails.append(("5", a, b))
            elif not C.is_zero():
                fails.append(("6", a, b))
    return {"ok": not fails, "failures": fails}


# --------------------------------------------------------- group elements

def _raw(rep: MatrixRep, t):
    f = rep.field
    if isinstance(t, FieldElement):
        if t.field != f:
            t = f(t.raw) if t.field.kind == f.kind else t
        return t.raw
    return f.convert(t)


def _x_raw(rep: MatrixRep, alpha: Root, t) -> Matrix:
    f = rep.field
    powers = rep.divided[alpha]
    out = powers[0]
    tk = f.one
    for D in powers[1:]:
        tk = f.mul(tk, t)
        if tk == f.zero:
            break
        out = out + D.scale(tk)
    return out


def x_elem(rep: MatrixRep, alpha: Root, t) -> GroupElement:
    return GroupElement(rep, _x_raw(rep, alpha, _raw(rep, t)))


def w_elem(rep: MatrixRep, alpha: Root, t=1) -> GroupElement:
    f = rep.field
    t = _raw(rep, t)
    if t == f.zero:
        raise NotInvertible("w_a(t) needs t invertible")
    xt = _x_raw(rep, alpha, t)
    return GroupElement(rep, xt * _x_raw(rep, -alpha, f.neg(f.inv(t))) * xt)


def h_elem(rep: MatrixRep, alpha: Root, t) -> GroupElement:
    return w_elem(rep, alpha, t) * w_elem(rep, alpha, 1).inverse()


def torus_from_h(rep: MatrixRep, parts: Sequence[Tuple[Root, object]]) -> GroupElement:
    g = rep.identity()
    for a, t in parts:
        g = g * h_elem(rep, a, t)
    return g


# ----------------------------------------------------- structure constants

def _combination_roots(phi: RootSystem, alpha: Root, beta: Root) -> list:
    index = set(phi.roots)
    out = []
    for s in range(2, 8):
        for i in range(1, s):
            j = s - i
            r = alpha.scale(i) + beta.scale(j)
            if r in index:
                out.append((i, j, r))
    return out


def _commutator(rep, alpha, beta, t, u) -> Matrix:
    f = rep.field
    return (_x_raw(rep, alpha, t) * _x_raw(rep, beta, u)
            * _x_raw(rep, alpha, f.neg(t)) * _x_raw(rep, beta, f.neg(u)))


def _peel(rep: MatrixRep, M: Matrix, combos) -> list:
    """Read off the parameters of prod x_g(c_g) from its matrix, in order."""
    f = rep.field
    ws = rep.weights
    out = []
    for i, j, g in combos:
        N = rep.nilpotents[g]
        c = None
        for (p, q) in N.support():
            v = f.mul(M.rows[p][q], f.inv(N.rows[p][q]))
            if c is None:
                c = v
            elif v != c:
                raise ExtractionInconsistent(f"entries of the {g} layer disagree")
        if c is None:
            c = f.zero
        out.append(c)
        M = _x_raw(rep, g, f.neg(c)) * M
    if not M.is_identity():
        raise ExtractionInconsistent("commutator is not a product of the expected root elements")
    return out


def _as_integer(f: Field, c):
    if f.kind == "rationals":
        v = c
    else:
        if c[1] != 0:
            return None
        v = c[0]
    return int(v) if v.denominator == 1 else None


@lru_cache(maxsize=None)
def _structure_constants(label: str, variant: str, alpha: Root, beta: Root, seed: int):
    phi = build(label)
    rep = _representation(label, variant, QI if variant == "g2_dim7" else QQ)
    f = rep.field
    combos = _combination_roots(phi, alpha, beta)
    if not combos:
        C = _commutator(rep, alpha, beta, f.one, f.one)
        if not C.is_identity():
            raise ExtractionInconsistent("nonzero commutator with no root combinations")
        return ()
    consts = None
    for t, u in ((1, 1), (2, 1), (1, 2)):
        tr, ur = f.from_int(t), f.from_int(u)
        vals = _peel(rep, _commutator(rep, alpha, beta, tr, ur), combos)
        cs = []
        for (i, j, g), v in zip(combos, vals):
            c = f.mul(v, f.inv(f.from_int(t ** i * u ** j)))
            cs.append(c)
        if consts is None:
            consts = cs
        elif cs != consts:
            raise ExtractionInconsistent("interpolation points disagree")
    rng = random.Random(seed)
    for _ in range(3):
        t = f.convert(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5)))
        u = f.convert(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5)))
        lhs = _commutator(rep, alpha, beta, t, u)
        rhs = Matrix.identity(f, rep.n)
        for (i, j, g), c in zip(combos, consts):
            rhs = rhs * _x_raw(rep, g, f.mul(c, f.mul(f.power(t, i), f.power(u, j))))
        if lhs != rhs:
            raise ExtractionInconsistent("verification point disagrees")
    out = []
    for (i, j, g), c in zip(combos, consts):
        k = _as_integer(f, c)
        if k is None:
            raise ExtractionInconsistent(f"non-integral constant {f.fmt(c)}")
        if k != 0:
            out.append((i, j, k))
    return tuple(out)


def structure_constants(rep: MatrixRep, alpha: Root, beta: Root, seed: int = 0) -> list:
    """Integers c_ij with [x_a(t), x_b(u)] = prod x_{ia+jb}(c_ij t^i u^j),
    factors ordered by i+j and then i.  Extracted in characteristic 0."""
    if alpha == -beta:
        raise ValueError("alpha + beta must be nonzero")
    return list(_structure_constants(rep.system.label, rep.variant, alpha, beta, seed))


# ------------------------------------------------------------ relations

def _sample(rng: random.Random, f: Field, nonzero: bool):
    if f.is_finite:
        elems = f.elements()
        while True:
            x = rng.choice(elems)
            if not (nonzero and x == f.zero):
                return x
    while True:
        x = f.convert(Fraction(rng.randint(-12, 12), rng.randint(1, 6)))
        if not (nonzero and x == f.zero):
            return x


@dataclass
class RelationReport:
    records: list
    signs: dict                 # (alpha, beta) -> c(alpha, beta) for R5
    constants: dict             # (alpha, beta) -> structure constants

    @property
    def ok(self) -> bool:
        return all(r["status"] == "pass" for r in self.records)

    @property
    def violations(self) -> list:
        return [r for r in self.records if r["status"] != "pass"]


def _record(relation, roots, params, failure):
    rec = {"relation": relation, "roots": [str(r) for r in roots],
           "parameters": params, "status": "pass" if failure is None else "fail",
           "witness": failure}
    return rec


def _r5_sign(rep: MatrixRep, alpha: Root, beta: Root) -> int:
    """c with w_a x_b(1) w_a^-1 = x_{w_a(b)}(c), read in characteristic 0."""
    base = _representation(rep.system.label, rep.variant, rep.base_field)
    f = base.field
    W = w_elem(base, alpha, 1).matrix
    M = W * _x_raw(base, beta, f.one) * W.inverse()
    g = reflect(beta, alpha)
    c = _peel(base, M, [(1, 0, g)])[0]
    for s in (1, -1):
        if c == f.from_int(s):
            return s
    raise ExtractionInconsistent(f"R5 coefficient for {alpha}, {beta} is not +-1")


def verify_relations(rep: MatrixRep, sample_count: int = 20, seed: int = 0) -> RelationReport:
    """Check R1-R6 on sampled parameters; violations become report entries."""
    f = rep.field
    phi = rep.system
    rng = random.Random(seed)
    records, signs, constants = [], {}, {}
    fmt = f.fmt
    roots = list(phi.roots)
    ts = [(_sample(rng, f, True), _sample(rng, f, False)) for _ in range(sample_count)]
    # R1
    for a in roots:
        bad = None
        for t, u in ts:
            if _x_raw(rep, a, t) * _x_raw(rep, a, u) != _x_raw(rep, a, f.add(t, u)):
                bad = {"t": fmt(t), "u": fmt(u)}
                break
        records.append(_record("R1", [a], len(ts), bad))
    # R2
    for a in roots:
        for b in roots:
            if a == b or a == -b:
                continue
            consts = structure_constants(rep, a, b)
            constants[(a, b)] = consts
            combos = {(i, j): r for i, j, r in _combination_roots(phi, a, b)}
            bad = None
            for t, u in ts:
                lhs = _commutator(rep, a, b, t, u)
                rhs = Matrix.identity(f, rep.n)
                for i, j, c in consts:
                    par = f.mul(f.from_int(c), f.mul(f.power(t, i), f.power(u, j)))
                    rhs = rhs * _x_raw(rep, combos[(i, j)], par)
                if lhs != rhs:
                    bad = {"t": fmt(t), "u": fmt(u)}
                    break
            records.append(_record("R2", [a, b], len(ts), bad))
    # R3: w_a = w_a(1); check w_a(1)^2 = h_a(-1) and w_a(t) = h_a(t) w_a
    for a in roots:
        w1 = w_elem(rep, a, 1).matrix
        bad = None
        if w1 * w1 != h_elem(rep, a, f.neg(f.one)).matrix:
            bad = {"check": "w_a^2 = h_a(-1)"}
        else:
            for t, _ in ts[:5]:
                if w_elem(rep, a, t).matrix != h_elem(rep, a, t).matrix * w1:
                    bad = {"t": fmt(t)}
                    break
        records.append(_record("R3", [a], 5, bad))
    # R4, R5, R6
    for a in roots:
        W = w_elem(rep, a, 1).matrix
        Wi = W.inverse()
        for b in roots:
            g = reflect(b, a)
            c = _r5_sign(rep, a, b)
            signs[(a, b)] = c
            k = pairing(b, a)
            bad4 = bad5 = bad6 = None
            for t, u in ts:
                if bad4 is None and W * h_elem(rep, b, t).matrix * Wi != h_elem(rep, g, t).matrix:
                    bad4 = {"t": fmt(t)}
                if bad5 is None and W * _x_raw(rep, b, t) * Wi != _x_raw(rep, g, f.mul(f.from_int(c), t)):
                    bad5 = {"t": fmt(t)}
                H = h_elem(rep, a, t).matrix
                if bad6 is None and H * _x_raw(rep, b, u) * H.inverse() != _x_raw(rep, b, f.mul(f.power(t, k), u)):
                    bad6 = {"t": fmt(t), "u": fmt(u)}
            records.append(_record("R4", [a, b], len(ts), bad4))
            records.append(_record("R5", [a, b], len(ts), bad5))
            records.append(_record("R6", [a, b], len(ts), bad6))
    return RelationReport(records, signs, constants)


# ---------------------------------------------------------------- Bruhat

def _permutation_of(m: Matrix) -> list:
    """sigma with m[r][sigma(r)] the only nonzero entry of row r."""
    z = m.field.zero
    sigma = []
    for r in m.rows:
        nz = [j for j, a in enumerate(r) if a != z]
        if len(nz) != 1:
            raise ValueError("not a monomial matrix")
        sigma.append(nz[0])
    return sigma


def weyl_representative(rep: MatrixRep, sigma: Sequence[int]) -> Matrix:
    """Product of w_{a_i}(1) along a reduced word for the permutation
    matrix with ones at (r, sigma(r))."""
    f, n = rep.field, rep.n
    word = []
    s = list(sigma)
    # bubble sort, recording adjacent transpositions
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if s[i] > s[i + 1]:
                s[i], s[i + 1] = s[i + 1], s[i]
                word.append(i)
                changed = True
    M = Matrix.identity(f, n)
    for i in reversed(word):
        M = w_elem(rep, rep.system.simple[i], 1).matrix * M
    return M


@dataclass(frozen=True)
class Bruhat:
    u: Matrix
    h: Matrix
    w: Matrix
    u2: Matrix
    sigma: tuple

    def product(self) -> Matrix:
        return self.u * self.h * self.w * self.u2


def bruhat_sl(g, rep: Optional[MatrixRep] = None) -> Bruhat:
    """g = u h w u' with u, u' upper unitriangular, h diagonal, w the
    canonical Weyl representative, and u' supported on the positive roots
    that w sends negative."""
    if isinstance(g, GroupElement):
        rep = rep or g.rep
        g = g.matrix
    if rep is None or rep.variant != "special_linear":
        raise UnsupportedFamily("Bruhat decomposition is implemented for SL only")
    f, n = g.field, g.n
    a = [list(r) for r in g.rows]
    left = [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]   # A with A g B = m
    right = [[f.one if i == j else f.zero for j in range(n)] for i in range(n)]
    for r in range(n - 1, -1, -1):
        p = next((j for j in range(n) if a[r][j] != f.zero), None)
        if p is None:
            raise NotInvertible("singular matrix")
        inv = f.inv(a[r][p])
        for j in range(p + 1, n):
            if a[r][j] != f.zero:
                c = f.mul(a[r][j], inv)
                for row in a:
                    row[j] = f.sub(row[j], f.mul(c, row[p]))
                for row in right:
                    row[j] = f.sub(row[j], f.mul(c, row[p]))
        for i in range(r):
            if a[i][p] != f.zero:
                c = f.mul(a[i][p], inv)
                a[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(a[i], a[r])]
                left[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(left[i], left[r])]
    m = Matrix(f, a)
    sigma = _permutation_of(m)
    W = weyl_representative(rep, sigma)
    h = m * W.inverse()
    return Bruhat(Matrix(f, left).inverse(), h, W, Matrix(f, right).inverse(), tuple(sigma))


def inverted_positions(sigma: Sequence[int]) -> list:
    """Positions (i, j), i < j, allowed in u' for the permutation sigma:
    those whose root e_i - e_j is sent negative."""
    inv = {c: r for r, c in enumerate(sigma)}
    n = len(sigma)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if inv[i] > inv[j]]


def bruhat_valid(b: Bruhat) -> bool:
    f = b.u.field
    n = b.u.n
    unitri = lambda M: all(M.rows[i][i] == f.one for i in range(n)) and all(
        M.rows[i][j] == f.zero for i in range(n) for j in range(i))
    allowed = set(inverted_positions(b.sigma))
    ok_u2 = all(b.u2.rows[i][j] == f.zero for i in range(n) for j in range(i + 1, n)
                if (i, j) not in allowed)
    return (unitri(b.u) and unitri(b.u2) and ok_u2 and b.h.is_diagonal()
            and b.h.det() == f.one)


def bruhat_exhaustive(n: int, q: int) -> dict:
    """Decompose every element of SL_n(F_q) and check the round trip and
    the normal form.  Uniqueness follows from counting: the number of
    admissible tuples (u, h, w, u') is |U| |H| sum_w q^l(w), and it must
    equal |SL_n(F_q)| for the surjective map to be a bijection."""
    from .fields import finite_field
    from .groups import enumerate as enumerate_group
    f = finite_field(q)
    rep = representation(build("A", n - 1), fld=f)
    G = enumerate_group("SL", n, q)
    bad_round, bad_form = 0, 0
    seen_w = set()
    for i in range(G.order):
        g = G.matrix(i)
        b = bruhat_sl(g, rep)
        if b.product() != g:
            bad_round += 1
        if not bruhat_valid(b):
            bad_form += 1
        seen_w.add(b.sigma)
    lengths = [len(inverted_positions(s)) for s in itertools.permutations(range(n))]
    tuples = q ** (n * (n - 1) // 2) * (q - 1) ** (n - 1) * sum(q ** k for k in lengths)
    return {"order": G.order, "round_trip_failures": bad_round,
            "normal_form_failures": bad_form, "weyl_cells_hit": len(seen_w),
            "tuple_count": tuples, "unique": tuples == G.order,
            "ok": bad_round == 0 and bad_form == 0 and tuples == G.order
            and len(seen_w) == len(lengths)}


# --------------------------------------------------------------- torus H

@dataclass
class HSubgroupReport:
    order: int
    torus_order: int
    elements: list               # diagonals as tuples of raw values
    all_square: bool             # every member satisfies the square condition
    all_arise: bool              # every square-condition diagonal is in H
    involutions: list

    @property
    def index(self) -> int:
        return self.torus_order // self.order


def h_subgroup(rep: MatrixRep, budget: int = 10 ** 6) -> HSubgroupReport:
    """Subgroup generated by h_a(t), a simple, t in K*, for an orthogonal
    model; compared with the diagonals diag[d_1..d_l, (1), 1/d_l..1/d_1]
    whose product d_1...d_l is a square."""
    if rep.variant not in ("even_orthogonal", "odd_orthogonal"):
        raise UnsupportedFamily("h_subgroup is defined for orthogonal models")
    f = rep.field
    if not f.is_finite:
        raise ValueError("h_subgroup needs a finite field")
    l = rep.system.rank
    units = [x for x in f.elements() if x != f.zero]
    gens = []
    for a in rep.system.simple:
        for t in units:
            d = h_elem(rep, a, t).matrix
            assert d.is_diagonal()
            gens.append(d.diagonal())
    gens = sorted(set(gens), key=lambda d: [f.code(x) for x in d])
    one = tuple(f.one for _ in range(rep.n))
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(f.mul(a, b) for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > budget:
                        raise SubgroupBudgetExceeded(f"H passed {budget} elements")
        frontier = nxt
    squares = {f.mul(x, x) for x in units}

    def square_condition(d) -> bool:
        prod = f.one
        for x in d[:l]:
            prod = f.mul(prod, x)
        return prod in squares

    torus = []
    for ds in itertools.product(units, repeat=l):
        mid = [f.one] if rep.variant == "odd_orthogonal" else []
        torus.append(tuple(ds) + tuple(mid) + tuple(f.inv(x) for x in reversed(ds)))
    good = {d for d in torus if square_condition(d)}
    elems = sorted(seen, key=lambda d: [f.code(x) for x in d])
    invs = [d for d in elems if d != one and all(f.mul(x, x) == f.one for x in d)]
    return HSubgroupReport(len(seen), len(torus), elems,
                           all(square_condition(d) for d in seen), good <= seen, invs)


# ------------------------------------------------------ commutator width

def commutator_width(model, budget: int = 10 ** 7) -> int:
    """Least k such that every element of the derived subgroup is a product
    of at most k commutators.

    ``model`` needs ``order``, ``identity``, ``mul(i, j)`` and ``inv(i)`` on
    integer element ids."""
    from .errors import BudgetExceeded
    n = model.order
    if n > budget:
        raise BudgetExceeded(f"group of order {n} exceeds budget {budget}")
    if hasattr(model, "mul_many"):
        return _width_vectorised(model)
    ids = range(n)
    inv = [model.inv(i) for i in ids]
    comms = set()
    for x in ids:
        for y in ids:
            comms.add(model.mul(model.mul(x, y), model.mul(inv[x], inv[y])))
    comms.discard(model.identity)
    if not comms:
        return 0
    # derived subgroup = closure of the commutator set
    reached = {model.identity} | comms
    layer = set(reached)
    k = 1
    cl = sorted(comms)
    while True:
        nxt = set()
        for x in layer:
            for c in cl:
                y = model.mul(x, c)
                if y not in reached:
                    nxt.add(y)
        if not nxt:
            return k
        reached |= nxt
        layer = nxt
        k += 1
        if k > n:
            raise BudgetExceeded("width search did not terminate")


def _width_vectorised(model) -> int:
    import numpy as np
    n = model.order
    ids = np.arange(n)
    inv = model.inverses
    is_comm = np.zeros(n, dtype=bool)
    for x in range(n):
        xy = model.mul_many(x, ids)
        is_comm[model.mul_many(xy, model.mul_many(inv[x], inv))] = True
    is_comm[model.identity] = False
    comms = np.nonzero(is_comm)[0]
    if not len(comms):
        return 0
    reached = is_comm.copy()
    reached[model.identity] = True
    layer = np.nonzero(reached)[0]
    k = 1
    while True:
        prods = np.unique(model.mul_many(layer[:, None], comms[None, :]))
        prods = prods[~reached[prods]]
        if not len(prods):
            return k
        reached[prods] = True
        layer = prods
        k += 1


def width_bound(rank: int, positive: int) -> int:
    """The safe reading 2*(6l + 3n) of the bound on commutator width."""
    return 2 * (6 * rank + 3 * positive)


# ---------------------------------------------------------- G2 lemma chain

def g2_lemma_chain(rep: MatrixRep) -> dict:
    """Facts about w_1(1) w_6(1) used to separate G2 from the classical types."""
    if rep.variant != "g2_dim7":
        raise UnsupportedFamily("G2 model required")
    f = rep.field
    R = _g2_roots(rep.system)
    half = f.inv(f.from_int(2))
    w = lambda k: w_elem(rep, R[k], 1)
    h2 = h_elem(rep, R[2], -1)
    w16 = w(1) * w(6)
    invs = [GroupElement(rep, Matrix.diagonal_matrix(f, [f.from_int(v) for v in d]))
            for d in G2_H_INVOLUTIONS]
    mone = f.neg(f.one)
    nh = f.neg(half)
    x_ = lambda k, raw: GroupElement(rep, _x_raw(rep, R[k], raw))
    steps = [
        (x_(-6, nh) * h2 * x_(-6, half), x_(-6, mone) * h2),
        (x_(6, f.one) * x_(-6, mone) * h2 * x_(6, mone), w(6) * h2),
        (x_(-1, nh) * w(6) * h2 * x_(-1, half), x_(-1, mone) * w(6) * h2),
        (x_(1, f.one) * x_(-1, mone) * w(6) * h2 * x_(1, mone), w16 * h2),
    ]
    return {
        "involution": (w16 * w16).is_identity() and not w16.is_identity(),
        "commutes_with_H_involutions": [(w16 * d).matrix == (d * w16).matrix for d in invs],
        "H_involutions_in_H": [all(f.mul(z, z) == f.one for z in d.matrix.diagonal()) for d in invs],
        "chain": [lhs.matrix == rhs.matrix for lhs, rhs in steps],
    }


def g2_printed_comparison(rep: Optional[MatrixRep] = None) -> dict:
    """Compare the repaired model with the printed w_k(t), h_k(t) and Weyl
    products.  Entries are 1-based; unreadable printed tokens are skipped."""
    rep = representation(build("G", 2), "g2_dim7", QI)
    f = rep.field
    R = _g2_roots(rep.system)
    out = {"w": {}, "h": {}, "weyl": {}}
    for t in (Fraction(2), Fraction(3)):
        tr = f.convert(t)
        for k, text in G2_PRINTED_W.items():
            P, unknown = _printed_w(text, tr)
            W = w_elem(rep, R[k], tr).matrix
            bad = [(p + 1, q + 1) for p, q in _diff(_sparse(P), W) if (p, q) not in unknown]
            out["w"].setdefault(k, set()).update(bad)
    out["w"] = {k: sorted(v) for k, v in out["w"].items()}
    for k, text in G2_PRINTED_H.items():
        exps = parse_printed_h(text)
        got = tuple(_pair(mu, R[k]) for mu in rep.weights)
        out["h"][k] = [i + 1 for i, (a, b) in enumerate(zip(exps, got)) if a != b]
    for (a, b), text in G2_PRINTED_WEYL.items():
        P, _ = _printed_w(text, f.one)
        M = (w_elem(rep, R[a], 1) * w_elem(rep, R[b], 1)).matrix
        out["weyl"][(a, b)] = [(p + 1, q + 1) for p, q in _diff(_sparse(P), M)]
    return out


def g2_root(k: int) -> Root:
    return _g2_roots(build("G", 2))[k]
