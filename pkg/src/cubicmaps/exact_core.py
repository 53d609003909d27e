"""Exact arbitrary-precision arithmetic and formal power-series operations.

Integers are plain Python ints (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which enforces the canonical-form invariants
(gcd(|num|, den) = 1, den > 0) on every value it produces.  Polynomials and
truncated power series are immutable wrappers around tuples of Fractions.

This module performs no floating-point arithmetic.  All operations are pure
functions over immutable values and are safe to share across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "BigIntValue",
    "Rational",
    "DensePolynomial",
    "TruncatedSeries",
    "ExactnessError",
    "factorial",
    "binomial",
    "poly_mul",
    "series_log",
    "convolve",
    "set_convolution_strategy",
    "get_convolution_strategy",
    "CONVOLUTION_STRATEGIES",
    "exact_div",
    "encode_int",
    "decode_int",
    "encode_rational",
    "decode_rational",
]

# Type aliases: the whole package uses native ints and Fractions as its
# exact number types.
BigIntValue = int
Rational = Fraction


class ExactnessError(ArithmeticError):
    """An exactness invariant failed (non-integral value, inexact division).

    This always signals an implementation bug, never valid data.
    """


def exact_div(a: int, b: int, what: str = "value") -> int:
    """Divide exactly, raising ExactnessError on any remainder."""
    q, r = divmod(a, b)
    if r:
        raise ExactnessError(f"{what}: {a} is not divisible by {b}")
    return q


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial is undefined for n={n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Convolution strategies
#
# All exact polynomial products in the package route through convolve(), so
# the multiplication strategy can be swapped (or benchmarked) without any API
# change.  "kronecker" packs integer coefficient vectors into single big
# integers and delegates to CPython's subquadratic bignum multiplication.
# ---------------------------------------------------------------------------


def _conv_schoolbook(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


_KARATSUBA_CUTOFF = 24


def _add_into(out: list, src: Sequence, offset: int) -> None:
    for i, v in enumerate(src):
        out[offset + i] += v


def _conv_karatsuba(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    if min(len(a), len(b)) <= _KARATSUBA_CUTOFF:
        return _conv_schoolbook(a, b)
    h = (max(len(a), len(b)) + 1) // 2
    a0, a1 = list(a[:h]), list(a[h:])
    b0, b1 = list(b[:h]), list(b[h:])
    z0 = _conv_karatsuba(a0, b0)
    z2 = _conv_karatsuba(a1, b1) if a1 and b1 else []
    asum = [x + y for x, y in zip(a0, a1)] + (a0[len(a1):] or a1[len(a0):])
    bsum = [x + y for x, y in zip(b0, b1)] + (b0[len(b1):] or b1[len(b0):])
    z1 = _conv_karatsuba(asum, bsum)
    out = [0] * (len(a) + len(b) - 1)
    _add_into(out, z0, 0)
    _add_into(out, z2, 2 * h)
    for i, v in enumerate(z1):
        out[h + i] += v
    for i, v in enumerate(z0):
        out[h + i] -= v
    for i, v in enumerate(z2):
        out[h + i] -= v
    return out


def _pack(values: Sequence[int], width_bytes: int) -> int:
    buf = b"".join(v.to_bytes(width_bytes, "little") for v in values)
    return int.from_bytes(buf, "little")


def _conv_kronecker_nonneg(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # Coefficient vectors of nonnegative ints; no carries as long as each
    # convolution coefficient fits the limb width.
    bits_a = max(v.bit_length() for v in a)
    bits_b = max(v.bit_length() for v in b)
    width = bits_a + bits_b + min(len(a), len(b)).bit_length() + 1
    wb = (width + 7) // 8
    product = _pack(a, wb) * _pack(b, wb)
    nout = len(a) + len(b) - 1
    raw = product.to_bytes(wb * (nout + 1), "little")
    return [
        int.from_bytes(raw[i * wb : (i + 1) * wb], "little") for i in range(nout)
    ]


def _conv_kronecker(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    if all(isinstance(v, int) for v in a) and all(isinstance(v, int) for v in b):
        if all(v >= 0 for v in a) and all(v >= 0 for v in b):
            return _conv_kronecker_nonneg(a, b)
        ap = [v if v > 0 else 0 for v in a]
        an = [-v if v < 0 else 0 for v in a]
        bp = [v if v > 0 else 0 for v in b]
        bn = [-v if v < 0 else 0 for v in b]
        out = [0] * (len(a) + len(b) - 1)
        for sa, sign_a in ((ap, 1), (an, -1)):
            if not any(sa):
                continue
            for sb, sign_b in ((bp, 1), (bn, -1)):
                if not any(sb):
                    continue
                part = _conv_kronecker_nonneg(sa, sb)
                s = sign_a * sign_b
                for i, v in enumerate(part):
                    out[i] += s * v
        return out
    # Rational coefficients: clear denominators, convolve ints, rescale.
    fa = [Fraction(v) for v in a]
    fb = [Fraction(v) for v in b]
    la = math.lcm(*(v.denominator for v in fa))
    lb = math.lcm(*(v.denominator for v in fb))
    ia = [v.numerator * (la // v.denominator) for v in fa]
    ib = [v.numerator * (lb // v.denominator) for v in fb]
    scale = la * lb
    return [Fraction(v, scale) for v in _conv_kronecker(ia, ib)]


CONVOLUTION_STRATEGIES = {
    "schoolbook": _conv_schoolbook,
    "karatsuba": _conv_karatsuba,
    "kronecker": _conv_kronecker,
}

_default_strategy = "auto"


def set_convolution_strategy(name: str) -> str:
    """Set the module-wide convolution strategy; returns the previous one."""
    global _default_strategy
    if name != "auto" and name not in CONVOLUTION_STRATEGIES:
        raise ValueError(f"unknown convolution strategy {name!r}")
    previous = _default_strategy
    _default_strategy = name
    return previous


def get_convolution_strategy() -> str:
    return _default_strategy


def _auto_strategy(a: Sequence, b: Sequence) -> str:
    if len(a) + len(b) <= 48:
        return "schoolbook"
    if all(isinstance(v, int) for v in a) and all(isinstance(v, int) for v in b):
        return "kronecker"
    return "karatsuba"


def convolve(a: Sequence, b: Sequence, strategy: str | None = None) -> list:
    """Exact convolution of two coefficient sequences (ints or Fractions)."""
    name = strategy or _default_strategy
    if name == "auto":
        name = _auto_strategy(a, b)
    try:
        fn = CONVOLUTION_STRATEGIES[name]
    except KeyError:
        raise ValueError(f"unknown convolution strategy {name!r}") from None
    return fn(a, b)


# ---------------------------------------------------------------------------
# Dense polynomials
# ---------------------------------------------------------------------------


def _canonical_coefficients(coefficients: Iterable) -> tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class DensePolynomial:
    """Polynomial with exact rational coefficients, index = exponent.

    Canonical form strips trailing zeros; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = ()):
        object.__setattr__(
            self, "coefficients", _canonical_coefficients(coefficients)
        )

    @classmethod
    def zero(cls) -> "DensePolynomial":
        return cls(())

    @classmethod
    def constant(cls, value) -> "DensePolynomial":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return Fraction(0)

    def evaluate(self, x) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        xq = Fraction(x)
        for c in reversed(self.coefficients):
            acc = acc * xq + c
        return acc

    __call__ = evaluate

    def derivative(self) -> "DensePolynomial":
        return DensePolynomial(
            i * c for i, c in enumerate(self.coefficients) if i
        )

    def shift(self, k: int) -> "DensePolynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return DensePolynomial((Fraction(0),) * k + self.coefficients)

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return DensePolynomial(out)

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, DensePolynomial):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return DensePolynomial(c * other for c in self.coefficients)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            term = str(c) if i == 0 else (f"{c}*x^{i}" if i > 1 else f"{c}*x")
            parts.append(term)
        return " + ".join(parts)


def poly_mul(
    a: DensePolynomial, b: DensePolynomial, strategy: str | None = None
) -> DensePolynomial:
    """Exact polynomial product; deg(a*b) = deg(a) + deg(b) when both nonzero."""
    if a.is_zero() or b.is_zero():
        return DensePolynomial.zero()
    return DensePolynomial(convolve(a.coefficients, b.coefficients, strategy))


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Dense power series over Fraction, exact up to order N inclusive.

    Operations never report coefficients beyond the truncation order.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be >= 0")
            coeffs = coeffs[: order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        elif not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients[0]

    def coefficient(self, exponent: int) -> Fraction:
        if not 0 <= exponent <= self.order:
            raise IndexError(
                f"coefficient {exponent} beyond truncation order {self.order}"
            )
        return self.coefficients[exponent]

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, x in enumerate(self.coefficients[: order + 1]):
            if x:
                for j in range(order + 1 - i):
                    y = other.coefficients[j]
                    if y:
                        out[i + j] += x * y
        return TruncatedSeries(out, order)

    __mul__ = mul

    def log(self) -> "TruncatedSeries":
        return series_log(self)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1, same truncation.

    Solves (log s)' = s'/s coefficient by coefficient:
        n*l_n = n*c_n - sum_{k=1}^{n-1} k*l_k*c_{n-k}.
    """
    c = s.coefficients
    if c[0] != 1:
        raise ValueError("series_log requires constant term 1")
    n_max = s.order
    l = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = n * c[n]
        for k in range(1, n):
            lk = l[k]
            if lk:
                acc -= k * lk * c[n - k]
        l[n] = acc / n
    return TruncatedSeries(l, n_max)


# ---------------------------------------------------------------------------
# Canonical string encodings (used verbatim in checkpoints and exports)
# ---------------------------------------------------------------------------


def encode_int(value: int) -> str:
    return str(int(value))


def decode_int(text: str) -> int:
    text = text.strip()
    sign = text[1:] if text.startswith("-") else text
    if not sign.isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def encode_rational(value: Fraction) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def decode_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(decode_int(num), decode_int(den))
    return Fraction(decode_int(text))
