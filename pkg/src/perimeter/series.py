"""Exact truncated power series over integer polynomials in ``p, q, t``.

Every generating function here is a ratio of polynomials in ``x`` (and
``y``) whose denominator has constant term ``+1`` or ``-1``, so the series
coefficients are obtained by long division without ever leaving the
integers.
"""

from __future__ import annotations

from math import comb
from typing import Optional

from .enumeration import enum_perimeter
from .errors import DomainError
from .partitions import stat_dif, stat_mod_prime

__all__ = [
    "VARS",
    "Polynomial",
    "P",
    "Q",
    "T",
    "X",
    "Y",
    "TruncatedSeries",
    "RationalExpr",
    "expand",
    "gf_rep_even",
    "gf_rep_even_expr",
    "gf_dist_even_bivariate",
    "dist_even_expr",
    "dist_even_nested_expr",
    "gf_mod",
    "gf_dif",
    "gf_signed_rep",
    "sum_series_mod",
    "sum_series_dif",
    "delta_series",
    "delta_binomial",
    "series_geq",
    "difference_identity_check",
    "joint_dif_mod",
    "parse_assignment",
]

VARS = ("p", "q", "t", "x", "y")
_NVARS = len(VARS)
_ZERO_EXP = (0,) * _NVARS


def _unit_exp(name):
    try:
        i = VARS.index(name)
    except ValueError:
        raise DomainError(f"unknown variable {name!r}") from None
    return tuple(1 if j == i else 0 for j in range(_NVARS))


class Polynomial:
    """Sparse polynomial with integer coefficients in the variables of ``VARS``.

    Terms are held in a dict from exponent tuples to nonzero ints.  Instances
    are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, int):
            self._terms = {_ZERO_EXP: terms} if terms else {}
        else:
            self._terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls._raw({_unit_exp(name): 1})

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        result = Polynomial(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- inspection ---------------------------------------------------------

    def terms(self):
        return self._terms.items()

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    def constant(self) -> int:
        """Value of a constant polynomial."""
        if not self.is_constant():
            raise DomainError(f"polynomial {self} is not constant")
        return self._terms.get(_ZERO_EXP, 0)

    def degree(self, name: str) -> int:
        i = VARS.index(name)
        return max((e[i] for e in self._terms), default=0)

    def coefficient(self, **exps) -> int:
        e = tuple(exps.get(v, 0) for v in VARS)
        return self._terms.get(e, 0)

    def subs(self, **values) -> "Polynomial":
        """Substitute integers for some of the variables."""
        idx = {}
        for name, val in values.items():
            if name not in VARS:
                raise DomainError(f"unknown variable {name!r}")
            idx[VARS.index(name)] = int(val)
        out = {}
        for e, c in self._terms.items():
            coeff = c
            new = list(e)
            for i, val in idx.items():
                if e[i]:
                    coeff *= val ** e[i]
                    new[i] = 0
            if coeff:
                key = tuple(new)
                s = out.get(key, 0) + coeff
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial._raw(out)

    def diff(self, name: str) -> "Polynomial":
        i = VARS.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                new = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[new] = c * e[i]
        return Polynomial._raw(out)

    def split_xy(self) -> dict:
        """Group terms by ``(x-degree, y-degree)``; values are polynomials in p, q, t."""
        out = {}
        for e, c in self._terms.items():
            key = (e[3], e[4])
            inner = e[:3] + (0, 0)
            out.setdefault(key, {})[inner] = c
        return {k: Polynomial._raw(v) for k, v in out.items()}

    def _sort_key(self, e):
        # lower total degree first, then earlier variables first
        return (sum(e), tuple(-k for k in e))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, key=self._sort_key):
            c = self._terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARS, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


P = Polynomial.var("p")
Q = Polynomial.var("q")
T = Polynomial.var("t")
X = Polynomial.var("x")
Y = Polynomial.var("y")
_ZERO = Polynomial()


class TruncatedSeries:
    """Coefficients of ``x^0..x^order`` (and ``y^0..y^order_y`` when bivariate).

    Coefficients are :class:`Polynomial` values in ``p, q, t``.  Index a
    univariate series with ``s[i]`` and a bivariate one with ``s[i, j]``.
    """

    __slots__ = ("order", "order_y", "_c")

    def __init__(self, coeffs, order: Optional[int] = None, order_y: Optional[int] = None):
        if order_y is None:
            rows = [[_poly(c)] for c in coeffs]
        else:
            rows = [[_poly(c) for c in row] for row in coeffs]
        if order is None:
            order = len(rows) - 1
        width = 1 if order_y is None else order_y + 1
        rows = rows[: order + 1]
        rows += [[_ZERO] * width for _ in range(order + 1 - len(rows))]
        for row in rows:
            row[width:] = []
            row += [_ZERO] * (width - len(row))
        self.order = order
        self.order_y = order_y
        self._c = rows

    @property
    def bivariate(self) -> bool:
        return self.order_y is not None

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            if not self.bivariate and j != 0:
                raise IndexError("univariate series has no y-degree")
        else:
            if self.bivariate:
                raise IndexError("bivariate series needs an (x, y) index")
            i, j = key, 0
        if i < 0 or i > self.order:
            raise IndexError(f"x-degree {i} beyond truncation order {self.order}")
        return self._c[i][j]

    def coefficients(self) -> list:
        if self.bivariate:
            return [list(row) for row in self._c]
        return [row[0] for row in self._c]

    def _like(self, rows, order=None, order_y=None):
        obj = TruncatedSeries.__new__(TruncatedSeries)
        obj.order = self.order if order is None else order
        obj.order_y = self.order_y if order_y is None else order_y
        obj._c = rows
        return obj

    def _common(self, other):
        if self.bivariate != other.bivariate:
            raise DomainError("cannot combine univariate and bivariate series")
        n = min(self.order, other.order)
        m = min(self.order_y, other.order_y) if self.bivariate else None
        return n, m

    def __add__(self, other):
        n, m = self._common(other)
        w = 1 if m is None else m + 1
        rows = [[self._c[i][j] + other._c[i][j] for j in range(w)] for i in range(n + 1)]
        return self._like(rows, n, m)

    def __neg__(self):
        return self._like([[-c for c in row] for row in self._c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Polynomial)):
            return self._like([[c * other for c in row] for row in self._c])
        n, m = self._common(other)
        w = 1 if m is None else m + 1
        rows = [[_ZERO] * w for _ in range(n + 1)]
        for i1 in range(n + 1):
            for j1 in range(w):
                a = self._c[i1][j1]
                if not a:
                    continue
                for i2 in range(n + 1 - i1):
                    for j2 in range(w - j1):
                        b = other._c[i2][j2]
                        if b:
                            rows[i1 + i2][j1 + j2] = rows[i1 + i2][j1 + j2] + a * b
        return self._like(rows, n, m)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.order == other.order
            and self.order_y == other.order_y
            and self._c == other._c
        )

    def truncate(self, order: int, order_y: Optional[int] = None) -> "TruncatedSeries":
        if order > self.order:
            raise DomainError("cannot extend a truncated series")
        if self.bivariate:
            order_y = self.order_y if order_y is None else order_y
            if order_y > self.order_y:
                raise DomainError("cannot extend a truncated series")
            return self._like([row[: order_y + 1] for row in self._c[: order + 1]], order, order_y)
        return self._like([list(r) for r in self._c[: order + 1]], order)

    def map(self, fn) -> "TruncatedSeries":
        return self._like([[fn(c) for c in row] for row in self._c])

    def subs(self, **values) -> "TruncatedSeries":
        return self.map(lambda c: c.subs(**values))

    def derivative_at(self, name: str, value: int = 1) -> "TruncatedSeries":
        """Coefficientwise derivative in ``name`` evaluated at ``name = value``."""
        return self.map(lambda c: c.diff(name).subs(**{name: value}))

    def is_integral(self) -> bool:
        return all(c.is_constant() for row in self._c for c in row)

    def to_ints(self):
        """Integer coefficients; raises when a symbolic coefficient survives."""
        if not self.is_integral():
            raise DomainError("series has symbolic coefficients")
        if self.bivariate:
            return [[c.constant() for c in row] for row in self._c]
        return [row[0].constant() for row in self._c]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in _flatten(self.to_ints()))

    def __repr__(self):
        if self.bivariate:
            return f"TruncatedSeries(order={self.order}, order_y={self.order_y})"
        shown = ", ".join(str(c) for c in self.coefficients()[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"


def _flatten(values):
    for v in values:
        if isinstance(v, list):
            yield from v
        else:
            yield v


def _poly(c):
    if isinstance(c, Polynomial):
        return c
    return Polynomial(int(c))


class RationalExpr:
    """``numerator / denominator`` with polynomials in ``x, y`` over ``Z[p, q, t]``.

    The denominator must have constant term ``+1`` or ``-1`` (its part of
    degree zero in both ``x`` and ``y`` is that constant), which keeps long
    division integral.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        numerator = _poly(numerator)
        denominator = _poly(denominator)
        const = denominator.split_xy().get((0, 0), _ZERO)
        if not const.is_constant() or const.constant() not in (1, -1):
            raise DomainError(
                f"denominator constant term must be +1 or -1, got {const}"
            )
        self.numerator = numerator
        self.denominator = denominator

    @staticmethod
    def _lift(other):
        if isinstance(other, RationalExpr):
            return other
        return RationalExpr(_poly(other))

    def __add__(self, other):
        other = self._lift(other)
        return RationalExpr(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RationalExpr(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return RationalExpr(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other):
        return self._lift(other) / self

    @property
    def has_y(self) -> bool:
        return self.numerator.degree("y") > 0 or self.denominator.degree("y") > 0

    def __repr__(self):
        return f"RationalExpr(({self.numerator}) / ({self.denominator}))"


def expand(expr, order: int, order_y: Optional[int] = None) -> TruncatedSeries:
    """Power series of ``expr`` truncated at ``x^order`` (and ``y^order_y``).

    Pass ``order_y`` for a bivariate expansion; an expression that involves
    ``y`` requires it.
    """
    if not isinstance(expr, RationalExpr):
        expr = RationalExpr(expr)
    if order < 0 or (order_y is not None and order_y < 0):
        raise DomainError("truncation orders must be nonnegative")
    if order_y is None and expr.has_y:
        raise DomainError("expression involves y; give order_y for a bivariate expansion")
    num = expr.numerator.split_xy()
    den = expr.denominator.split_xy()
    unit = den.pop((0, 0)).constant()
    den_terms = sorted(den.items())
    m = 0 if order_y is None else order_y
    rows = [[_ZERO] * (m + 1) for _ in range(order + 1)]
    for i in range(order + 1):
        row = rows[i]
        for j in range(m + 1):
            acc = num.get((i, j), _ZERO)
            for (a, b), c in den_terms:
                if a <= i and b <= j:
                    prev = rows[i - a][j - b]
                    if prev:
                        acc = acc - c * prev
            row[j] = acc if unit == 1 else -acc
    return _build(rows, order, order_y)


def _build(rows, order, order_y):
    obj = TruncatedSeries.__new__(TruncatedSeries)
    obj.order = order
    obj.order_y = order_y
    obj._c = rows
    return obj


# -- generating functions ------------------------------------------------------


def gf_rep_even_expr() -> RationalExpr:
    num = X * (1 - (P - 1) * Q * (X**2 + X))
    den = (
        1
        - P * (1 + Q) * X
        - (1 - P**2 * Q) * X**2
        - (1 - P) * (1 + Q) * X**3
        - (P - 1) ** 2 * Q * X**4
    )
    return RationalExpr(num, den)


def gf_rep_even(order: int) -> TruncatedSeries:
    """Coefficient of ``x^n``: sum of ``p^rep q^even`` over perimeter ``n``."""
    if order < 1:
        raise DomainError("order must be at least 1")
    return expand(gf_rep_even_expr(), order)


def dist_even_nested_expr() -> RationalExpr:
    """The joint (dist, even, length, largest part) function built from its
    nested fractions with rational arithmetic."""
    a = RationalExpr(1, 1 - X)
    b = RationalExpr(1, 1 - Q * X)
    first = 1 + P * X * a
    second = 1 + P * Q * X * b
    inner = P * Q * X * b + P * X * Y * (1 - Q * X + P * Q * X) * a * b
    return P * X * Y * a + inner * first * Y**2 / (1 - first * second * Y**2)


def dist_even_expr() -> RationalExpr:
    """Single-fraction form of the (dist, even, length, largest part) function.

    With ``U = 1 - x + p x`` and ``V = 1 - q x + p q x``::

        numerator   = p x y ((1-x)(1-qx) - U V y^2) + (p q x (1-x) + p x y V) U y^2
        denominator = (1-x) ((1-x)(1-qx) - U V y^2)

    obtained by putting every nested fraction over ``(1-x)(1-qx)`` and
    cancelling one common factor ``(1-x)(1-qx)`` between the outer
    numerator and denominator.
    """
    U = 1 - X + P * X
    V = 1 - Q * X + P * Q * X
    core = (1 - X) * (1 - Q * X) - U * V * Y**2
    num = P * X * Y * core + (P * Q * X * (1 - X) + P * X * Y * V) * U * Y**2
    return RationalExpr(num, (1 - X) * core)


def gf_dist_even_bivariate(order: int, order_y: int) -> TruncatedSeries:
    """Coefficient of ``x^b y^a``: sum of ``p^dist q^even`` over partitions
    with ``b`` parts and largest part ``a``."""
    if order < 1 or order_y < 1:
        raise DomainError("orders must be at least 1")
    return expand(dist_even_expr(), order, order_y)


def _check_d(d, low=1):
    if d < low:
        raise DomainError(f"d must be at least {low}, got {d}")


def gf_mod(d: int, order: int, order_y: Optional[int] = None) -> TruncatedSeries:
    """Distribution of the residue statistics.

    Univariate: coefficient of ``x^n`` is the sum of ``t^mod'_d`` over
    perimeter ``n``.  Bivariate (``order_y`` given): coefficient of
    ``x^b y^a`` is the sum of ``t^mod_d`` over partitions with ``b`` parts
    and largest part ``a``.
    """
    _check_d(d)
    if order_y is None:
        num = X * (T * X ** (d + 1) + (1 - T * X) ** d * (X - 1))
        den = (1 - X - T * X) * ((1 - T * X) ** d * (X - 1) + X ** (d + 1))
        return expand(RationalExpr(num, den), order)
    head = RationalExpr(T * X * Y * (1 - X) ** d)
    tail = RationalExpr(X * Y, X + Y - 1) * (Y ** (d + 1) - Y * (1 - X) ** d)
    expr = (head + tail) / ((1 - T * X) * (1 - X) ** d - Y ** (d + 1))
    return expand(expr, order, order_y)


def gf_dif(d: int, order: int, order_y: Optional[int] = None) -> TruncatedSeries:
    """Distribution of ``dif_d``; bivariate form splits by length and largest part."""
    _check_d(d)
    if order_y is None:
        expr = RationalExpr(X, 1 - X - T * X * (1 - X**d) - X ** (d + 1))
        return expand(expr, order)
    expr = RationalExpr(X * Y, 1 - Y - T * X * (1 - Y**d) - X * Y**d)
    return expand(expr, order, order_y)


def gf_signed_rep(order: int) -> TruncatedSeries:
    """Sum of ``(-1)^length p^rep`` over each perimeter."""
    return expand(RationalExpr(X, (P - 1) * (X**2 - X) - 1), order)


def sum_series_mod(d: int, order: int) -> TruncatedSeries:
    """Coefficient of ``x^n``: total of ``mod'_d`` over perimeter ``n``."""
    _check_d(d)
    num = X * (1 - X) * (X ** (d + 1) - X * (1 - X) ** d)
    den = (1 - 2 * X) ** 2 * (X ** (d + 1) - (1 - X) ** (d + 1))
    return expand(RationalExpr(num, den), order)


def sum_series_dif(d: int, order: int) -> TruncatedSeries:
    """Coefficient of ``x^n``: total of ``dif_d`` over perimeter ``n``."""
    _check_d(d)
    return expand(RationalExpr(X**2 * (1 - X**d), (1 - 2 * X) ** 2), order)


def delta_series(d: int, order: int) -> TruncatedSeries:
    """``1/((1-x)^(d+1) - x^(d+1)) - 1/(1-2x)`` to ``x^order``.

    Check the sign pattern with ``.is_nonnegative()``.
    """
    _check_d(d, 0)
    first = expand(RationalExpr(1, (1 - X) ** (d + 1) - X ** (d + 1)), order)
    return first - expand(RationalExpr(1, 1 - 2 * X), order)


def delta_binomial(d: int, n: int) -> int:
    """Binomial-sum forms of the ``x^n`` coefficient of the difference series
    for ``d = 2, 3, 4``."""
    if d == 2:
        return sum(comb(n, 3 * i + 1) for i in range(n // 3 + 1))
    if d == 3:
        return sum(2 * comb(n + 1, 4 * i + 2) for i in range(n // 4 + 2))
    if d == 4:
        return sum(
            3 * comb(n + 2, 5 * i + 3) - comb(n, 5 * i + 2) for i in range(n // 5 + 2)
        )
    raise DomainError(f"binomial form known for d in 2..4, got {d}")


def series_geq(f: TruncatedSeries, g: TruncatedSeries) -> bool:
    """Coefficientwise ``f >= g``; both series must have integer coefficients."""
    if f.order != g.order or f.order_y != g.order_y:
        raise DomainError("series_geq needs equal truncation orders")
    return (f - g).is_nonnegative()


def difference_identity_check(d: int, order: int) -> bool:
    """Check the closed form of ``sum dif_d - sum mod'_d`` two ways.

    The difference of the two total-count series is compared with
    ``x^(d+2) (1 - 2x + x^(d+1) - (1-x)^(d+1)) / ((1-2x)^2 ((1-x)^(d+1) - x^(d+1)))``
    and with ``x^(d+2) / (1 - 2x)`` times the difference series of
    :func:`delta_series`.
    """
    _check_d(d)
    lhs = sum_series_dif(d, order) - sum_series_mod(d, order)
    closed = expand(
        RationalExpr(
            X ** (d + 2) * (1 - 2 * X + X ** (d + 1) - (1 - X) ** (d + 1)),
            (1 - 2 * X) ** 2 * ((1 - X) ** (d + 1) - X ** (d + 1)),
        ),
        order,
    )
    factored = (
        expand(RationalExpr(X ** (d + 2), 1 - 2 * X), order) * delta_series(d, order)
    )
    return lhs == closed and lhs == factored


def joint_dif_mod(d: int, order: int) -> TruncatedSeries:
    """Coefficient of ``x^n``: sum of ``p^dif_d q^mod'_d`` over perimeter ``n``.

    Computed by enumeration; no closed form is known for this pair, so the
    table is offered as data only.
    """
    _check_d(d)
    coeffs = [_ZERO]
    for n in range(1, order + 1):
        acc = {}
        for lam in enum_perimeter(n):
            e = (stat_dif(lam, d), stat_mod_prime(lam, d), 0, 0, 0)
            acc[e] = acc.get(e, 0) + 1
        coeffs.append(Polynomial._raw(acc))
    return TruncatedSeries(coeffs, order)


def parse_assignment(text: str) -> dict:
    """Parse ``"p=1,q=2"`` into ``{"p": 1, "q": 2}``."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in ("p", "q", "t"):
            raise DomainError(f"bad assignment {item!r}; expected p=..., q=..., t=...")
        try:
            out[name] = int(value)
        except ValueError:
            raise DomainError(f"assignment needs an integer: {item!r}") from None
    return out
