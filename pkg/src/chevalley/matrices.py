"""Small dense matrices over the exact fields of :mod:`chevalley.fields`.

Entries are stored as raw field values in a tuple of row tuples, so matrices
are hashable and immutable.  Prime fields get a fast multiplication path
that works on plain ints.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotInvertible
from .fields import Field, FieldElement


class Matrix:
    __slots__ = ("field", "rows", "n", "_hash")

    def __init__(self, field: Field, rows: Iterable[Sequence]):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[field.zero] * n for _ in range(n)])

    @classmethod
    def from_values(cls, field: Field, rows: Iterable[Sequence]) -> "Matrix":
        """Convert ints, Fractions or raw tuples entrywise."""
        return cls(field, [[field.convert(v) for v in r] for r in rows])

    @classmethod
    def diagonal_matrix(cls, field: Field, diag: Sequence) -> "Matrix":
        n = len(diag)
        return cls(field, [[diag[i] if i == j else field.zero for j in range(n)]
                           for i in range(n)])

    # basic protocol ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __getitem__(self, ij):
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def __repr__(self):
        f = self.field
        body = "; ".join(" ".join(f.fmt(x) for x in r) for r in self.rows)
        return f"Matrix[{f!r}]({body})"

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.n != self.n:
            raise DimensionMismatch(f"{self.n}x{self.n} vs {other.n}x{other.n}")

    # arithmetic -------------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        """Multiply by a raw scalar or FieldElement."""
        if isinstance(c, FieldElement):
            c = c.raw
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        self._check(other)
        f = self.field
        cols = list(zip(*other.rows))
        if f.kind == "prime":
            p = f.p
            return Matrix(f, [[sum(a * b for a, b in zip(r, c)) % p for c in cols]
                              for r in self.rows])
        add, mul, zero = f.add, f.mul, f.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a != zero and b != zero:
                        acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(f, out)

    __matmul__ = __mul__

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Matrix.identity(self.field, self.n), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def bracket(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows))

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        z = self.field.zero
        return all(a == z for r in self.rows for a in r)

    def is_identity(self) -> bool:
        z, o = self.field.zero, self.field.one
        return all(a == (o if i == j else z) for i, r in enumerate(self.rows)
                   for j, a in enumerate(r))

    def is_diagonal(self) -> bool:
        z = self.field.zero
        return all(a == z for i, r in enumerate(self.rows) for j, a in enumerate(r) if i != j)

    def is_scalar(self) -> bool:
        return self.is_diagonal() and len(set(self.diagonal())) == 1

    def diagonal(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.n))

    def support(self) -> list:
        z = self.field.zero
        return [(i, j) for i, r in enumerate(self.rows) for j, a in enumerate(r) if a != z]

    # elimination ------------------------------------------------------------
    def det(self):
        """Raw determinant by Gaussian elimination."""
        f = self.field
        a = [list(r) for r in self.rows]
        n, d = self.n, f.one
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != f.zero), None)
            if piv is None:
                return f.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                d = f.neg(d)
            d = f.mul(d, a[c][c])
            inv = f.inv(a[c][c])
            for r in range(c + 1, n):
                if a[r][c] != f.zero:
                    k = f.mul(a[r][c], inv)
                    a[r] = [f.sub(x, f.mul(k, y)) for x, y in zip(a[r], a[c])]
        return d

    def inverse(self) -> "Matrix":
        f, n = self.field, self.n
        a = [list(r) + [f.one if i == j else f.zero for j in range(n)]
             for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != f.zero), None)
            if piv is None:
                raise NotInvertible("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = f.inv(a[c][c])
            a[c] = [f.mul(inv, x) for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != f.zero:
                    k = a[r][c]
                    a[r] = [f.sub(x, f.mul(k, y)) for x, y in zip(a[r], a[c])]
        return Matrix(f, [r[n:] for r in a])

    def map(self, field: Field, fn=None) -> "Matrix":
        """Entrywise image in another field; fn maps raw values, default convert."""
        fn = fn or field.convert
        return Matrix(field, [[fn(a) for a in r] for r in self.rows])


def nullspace(field: Field, rows: Sequence[Sequence]) -> list:
    """Basis of {x : A x = 0} for a list of raw-valued equation rows."""
    if not rows:
        return []
    f = field
    a = [list(r) for r in rows]
    m = len(a[0])
    pivots, r = [], 0
    for c in range(m):
        piv = next((i for i in range(r, len(a)) if a[i][c] != f.zero), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = f.inv(a[r][c])
        a[r] = [f.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != f.zero:
                k = a[i][c]
                a[i] = [f.sub(x, f.mul(k, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [f.zero] * m
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(a[i][fc])
        basis.append(v)
    return basis


def elementary(field: Field, n: int, entries: dict) -> Matrix:
    """Matrix with the given {(i, j): raw} entries and zeros elsewhere."""
    rows = [[field.zero] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = v
    return Matrix(field, rows)


def check_same_field(*ms: Matrix) -> Optional[Field]:
    fields = {m.field for m in ms}
    if len(fields) > 1:
        raise FieldMismatch("matrices over different fields")
    return fields.pop() if fields else None
