"""Exact univariate polynomial and rational-function arithmetic over the integers.

Every series in this package (Hilbert and Poincare series alike) is carried as a
:class:`RationalFunction` whose numerator and denominator are integer
polynomials in ``t``.  Rational numbers are plain :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import InvalidInputError, NotAPowerSeriesError, PoleError

Rational = Fraction
Number = Union[int, Fraction]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in ``t``; ``coeffs[k]`` multiplies ``t**k``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def const(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def one_plus_t_pow(cls, k: int) -> Polynomial:
        return cls((1, 1)) ** k

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def lowest_order(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise InvalidInputError("zero polynomial has no lowest-order term")

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> Polynomial:
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return Polynomial(c // g for c in self.coeffs)

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise InvalidInputError("negative polynomial power")
        result, base = Polynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_exact(self, c: int) -> Polynomial:
        """Divide every coefficient by ``c``; the division must be exact."""
        out = []
        for a in self.coeffs:
            q, r = divmod(a, c)
            if r:
                raise InvalidInputError(f"{c} does not divide {self}")
            out.append(q)
        return Polynomial(out)

    def pseudo_rem(self, other: Polynomial) -> Polynomial:
        if other.is_zero():
            raise InvalidInputError("division by zero polynomial")
        r = list(self.coeffs)
        m, lc = other.degree, other.lc
        while len(r) - 1 >= m and r:
            shift = len(r) - 1 - m
            top = r[-1]
            r = [lc * c for c in r]
            for k, b in enumerate(other.coeffs):
                r[k + shift] -= top * b
            while r and r[-1] == 0:
                r.pop()
        return Polynomial(r)

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Quotient of an exact division in Z[t]."""
        if other.is_zero():
            raise InvalidInputError("division by zero polynomial")
        r = list(self.coeffs)
        m, lc = other.degree, other.lc
        q = [0] * max(len(r) - m, 0)
        while r and len(r) - 1 >= m:
            shift = len(r) - 1 - m
            c, rem = divmod(r[-1], lc)
            if rem:
                raise InvalidInputError(f"{other} does not divide {self} over Z")
            q[shift] = c
            for k, b in enumerate(other.coeffs):
                r[k + shift] -= c * b
            while r and r[-1] == 0:
                r.pop()
        if r:
            raise InvalidInputError(f"{other} does not divide {self}")
        return Polynomial(q)

    def gcd(self, other: Polynomial) -> Polynomial:
        """Primitive gcd with positive leading coefficient (primitive Euclidean PRS)."""
        a, b = self.primitive(), other.primitive()
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        while not b.is_zero():
            a, b = b, a.pseudo_rem(b).primitive()
        return a.primitive()

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> Polynomial:
        """p(-t)."""
        return Polynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def to_text(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mon = var if k == 1 else f"{var}^{k}"
                body = mon if mag == 1 else f"{mag}{mon}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()


ONE = Polynomial((1,))
T = Polynomial((0, 1))
ONE_PLUS_T = Polynomial((1, 1))
ONE_MINUS_T = Polynomial((1, -1))


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial((x,))
    return Polynomial(tuple(x))


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient ``numerator / denominator`` of integer polynomials.

    Construction always normalizes: the two polynomials are coprime, the
    overall integer content is one, and the lowest-order nonzero denominator
    coefficient is positive.  Equal rational functions therefore compare equal
    field by field.
    """

    numerator: Polynomial
    denominator: Polynomial = ONE

    def __post_init__(self):
        num, den = _as_poly(self.numerator), _as_poly(self.denominator)
        if den.is_zero():
            raise InvalidInputError("zero denominator")
        if num.is_zero():
            num, den = Polynomial(), ONE
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = gcd(num.content(), den.content())
            if den[den.lowest_order()] < 0:
                c = -c
            if c != 1:
                num, den = num.scale_exact(c), den.scale_exact(c)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_coeffs(cls, num: Sequence[int], den: Sequence[int] = (1,)) -> RationalFunction:
        return cls(Polynomial(tuple(num)), Polynomial(tuple(den)))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Polynomial)):
            return RationalFunction(_as_poly(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def reciprocal(self) -> RationalFunction:
        if self.numerator.is_zero():
            raise InvalidInputError("reciprocal of zero")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        return RationalFunction(self.numerator ** k, self.denominator ** k)

    def reflect(self) -> RationalFunction:
        """f(-t)."""
        return RationalFunction(self.numerator.reflect(), self.denominator.reflect())

    def is_power_series(self) -> bool:
        return self.denominator[0] != 0

    def to_text(self) -> str:
        num = _factored_text(self.numerator)
        if self.denominator == ONE:
            return num
        return f"{num} / {_factored_text(self.denominator)}"

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        return {
            "num": [str(c) for c in self.numerator.coeffs] or ["0"],
            "den": [str(c) for c in self.denominator.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> RationalFunction:
        return cls.from_coeffs([int(c) for c in obj["num"]], [int(c) for c in obj["den"]])


def _split_power(p: Polynomial, factor: Polynomial) -> tuple[int, Polynomial]:
    k = 0
    while p.degree >= 1 and p.pseudo_rem(factor).is_zero():
        p = p.exact_div(factor)
        k += 1
    return k, p


def _factored_text(p: Polynomial) -> str:
    """Render with powers of (1+t) and (1-t) pulled out, e.g. ``(1 + t)^2 (1 - 3t)``."""
    if p.degree < 1:
        return p.to_text()
    parts = []
    rest = p
    for factor in (ONE_PLUS_T, ONE_MINUS_T):
        k, rest = _split_power(rest, factor)
        if k:
            parts.append(f"({factor.to_text()})" + (f"^{k}" if k > 1 else ""))
    if rest != ONE or not parts:
        if rest == -ONE:
            parts.insert(0, "-")
        else:
            multi = sum(1 for c in rest.coeffs if c) > 1
            if multi:
                parts.append(f"({rest.to_text()})")
            else:
                parts.insert(0, rest.to_text())
    return " ".join(parts) if parts[0] != "-" else "-" + " ".join(parts[1:])


def ratfun_normalize(num, den) -> RationalFunction:
    return RationalFunction(_as_poly(num), _as_poly(den))


def series_expand(f: RationalFunction, order: int) -> list:
    """Coefficients ``c_0 .. c_order`` of the power series of ``f``.

    Coefficients are ints when the denominator's constant term is +-1 and
    Fractions otherwise.
    """
    if order < 0:
        raise InvalidInputError("order must be nonnegative")
    den = f.denominator
    d0 = den[0]
    if d0 == 0:
        raise NotAPowerSeriesError(f"denominator {den} vanishes at t=0")
    unit = d0 in (1, -1)
    out: list = []
    for k in range(order + 1):
        acc = f.numerator[k]
        for j in range(1, min(k, den.degree) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * d0 if unit else Fraction(acc, d0))
    return out


def cauchy_product(a: Sequence, b: Sequence, order: int) -> list:
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(order + 1)]


def eval_at_rational(f: RationalFunction, q: Number) -> Fraction:
    q = Fraction(q)
    den = f.denominator(q)
    if den == 0:
        raise PoleError(f"{f} has a pole at t={q}")
    return Fraction(f.numerator(q)) / den
