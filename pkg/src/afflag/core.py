"""Exact rational vectors, matrices and multivariate polynomials over Q.

Vectors are tuples, matrices are tuples of row tuples. Entries are ints or
:class:`fractions.Fraction`; nothing here ever produces a float.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rat = Fraction
Vector = tuple
Matrix = tuple


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use ints, Fractions or 'p/q' strings")
    return Fraction(x)


def rat_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# -- vectors and matrices --------------------------------------------------

def _check_len(x, y):
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")


def vadd(x, y):
    _check_len(x, y)
    return tuple(a + b for a, b in zip(x, y))


def vsub(x, y):
    _check_len(x, y)
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x):
    return tuple(c * a for a in x)


def vneg(x):
    return tuple(-a for a in x)


def dot(x, y):
    _check_len(x, y)
    return sum((a * b for a, b in zip(x, y)), 0)


def zeros(n):
    return (0,) * n


def unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def identity(n) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def matvec(m, x):
    return tuple(dot(row, x) for row in m)


def vecmat(x, m):
    """Row vector times matrix."""
    _check_len(x, m)
    n = len(m[0]) if m else 0
    return tuple(sum((x[k] * m[k][j] for k in range(len(m))), 0) for j in range(n))


def transpose(m) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a, b) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def bilinear(x, m, y):
    """``x^T m y``."""
    return dot(x, matvec(m, y))


def _normalize(x):
    # integral Fractions collapse to int so that integer matrices stay integer
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def det(m) -> Fraction:
    n = len(m)
    a = [[Fraction(e) for e in row] for row in m]
    sign, result = 1, Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return sign * result


def inverse(m) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    n = len(m)
    a = [[Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(_normalize(x) for x in row[n:]) for row in a)


def rref(rows: Iterable[Sequence]) -> Matrix:
    """Reduced row echelon form with zero rows dropped.

    Two row lists span the same space iff their ``rref`` are equal.
    """
    a = [[Fraction(e) for e in row] for row in rows]
    if not a:
        return ()
    ncols = len(a[0])
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[pivot_row], a[piv] = a[piv], a[pivot_row]
        p = a[pivot_row][col]
        a[pivot_row] = [x / p for x in a[pivot_row]]
        for r in range(len(a)):
            if r != pivot_row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[pivot_row])]
        pivot_row += 1
        if pivot_row == len(a):
            break
    return tuple(tuple(_normalize(x) for x in row) for row in a[:pivot_row])


def rank(rows) -> int:
    return len(rref(rows))


def solve(m, b):
    """Solve ``m x = b`` for square nonsingular ``m``."""
    return matvec(inverse(m), b)


# -- polynomials ---------------------------------------------------------------

class Poly:
    """Multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    Fractions. Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent {exps} for variables {self.variables}")
            c = rat(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, which):
        variables = tuple(variables)
        i = variables.index(which) if isinstance(which, str) else which
        return cls(variables, {unit(len(variables), i): 1})

    @classmethod
    def gens(cls, variables):
        return tuple(cls.variable(variables, i) for i in range(len(variables)))

    @classmethod
    def linear_form(cls, variables, coeffs):
        n = len(variables)
        return cls(variables, {unit(n, i): c for i, c in enumerate(coeffs)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        return Poly.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = rat(other)
            return Poly(self.variables, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == Poly.constant(self.variables, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __call__(self, *point):
        return poly_eval(self, point)

    def partial(self, i: int) -> Poly:
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Poly(self.variables, terms)

    def compose(self, subs: Sequence[Poly]) -> Poly:
        """Substitute ``subs[i]`` for the i-th variable."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        if not subs:
            return self
        target = subs[0].variables
        # variables substituted by themselves only shift exponents
        moved = [i for i, s in enumerate(subs)
                 if target != self.variables or s != Poly.variable(target, i)]
        fixed = [i for i in range(self.nvars) if i not in moved]
        powers: dict = {}
        partial: dict = {}

        def pw(i, k):
            if (i, k) not in powers:
                powers[i, k] = subs[i] ** k
            return powers[i, k]

        terms: dict = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in moved)
            if key not in partial:
                p = Poly.constant(target, 1)
                for i, k in zip(moved, key):
                    if k:
                        p = p * pw(i, k)
                partial[key] = p
            shift = [0] * len(target)
            for i in fixed:
                shift[i] = e[i]
            for e2, c2 in partial[key].terms.items():
                e3 = tuple(a + b for a, b in zip(e2, shift))
                terms[e3] = terms.get(e3, 0) + c * c2
        return Poly(target, terms)

    def linear_substitute(self, m) -> Poly:
        """The polynomial ``x -> self(m x)`` for a square matrix ``m``."""
        return self.compose([Poly.linear_form(self.variables, row) for row in m])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(rat_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rat_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_eval(p: Poly, point: Sequence) -> Fraction:
    if len(point) != p.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {p.nvars} variables")
    point = [rat(x) for x in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for x, k in zip(point, e):
            if k:
                term *= x ** k
        total += term
    return total


def poly_gradient(p: Poly) -> tuple[Poly, ...]:
    return tuple(p.partial(i) for i in range(p.nvars))


def directional_derivative(f: Poly, a: Sequence, b: Sequence) -> Fraction:
    """``grad f(a) . b``."""
    if len(b) != f.nvars:
        raise ValueError("direction has wrong dimension")
    return sum((poly_eval(g, a) * rat(bi) for g, bi in zip(poly_gradient(f), b)), Fraction(0))


def difference_quotient_u(f: Poly, a: Sequence, b: Sequence, u) -> Fraction:
    """``(f(a + u b) - f(a)) / u``, continued to ``u = 0`` by ``grad f(a) . b``."""
    if len(a) != f.nvars or len(b) != f.nvars:
        raise ValueError("dimension mismatch")
    u = rat(u)
    if u == 0:
        return directional_derivative(f, a, b)
    shifted = [rat(x) + u * rat(y) for x, y in zip(a, b)]
    return (poly_eval(f, shifted) - poly_eval(f, a)) / u


def elementary_symmetric(polys: Sequence[Poly], variables) -> list[Poly]:
    """``[e_0, e_1, ..., e_n]`` of the given polynomials."""
    es = [Poly.constant(variables, 1)]
    for p in polys:
        nxt = es + [Poly(variables)]
        for k in range(len(es), 0, -1):
            nxt[k] = nxt[k] + es[k - 1] * p
        es = nxt
    return es

