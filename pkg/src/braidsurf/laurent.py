"""Laurent polynomials in one variable t with exact integer coefficients,
and determinants of matrices over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "InexactDivisionError",
    "T",
    "ONE",
    "ZERO",
    "exact_divide",
    "det_laurent",
    "laurent_identity",
    "geometric_sum",
]


class InexactDivisionError(ArithmeticError):
    """The divisor does not divide the dividend in Z[t, t^-1]."""


@dataclass(frozen=True)
class LaurentPoly:
    """sum_k coeffs[k] * t^(low + k), stored trimmed.

    The zero polynomial has ``low == 0`` and no coefficients.
    """

    low: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        lo = self.low
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        c = c[start:end]
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "low", lo + start if c else 0)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls(exp, (coeff,))

    @classmethod
    def from_dict(cls, terms: dict) -> LaurentPoly:
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)))

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict[int, int]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - lo + k] += c
        return LaurentPoly(lo, tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.low + other.low, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1 or abs(self.coeffs[0]) != 1:
                raise InexactDivisionError("only units have negative powers")
            return LaurentPoly(self.low * k, (self.coeffs[0] ** k,))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly(self.low + k, self.coeffs) if self.coeffs else self

    def __call__(self, x):
        """Evaluate exactly; integer result for x = +-1, Fraction otherwise."""
        if x == 0 and self.low < 0:
            raise ZeroDivisionError("negative power of t at t = 0")
        if x in (1, -1):
            return sum(c * (x ** ((self.low + k) % 2)) for k, c in enumerate(self.coeffs))
        x = Fraction(x)
        val = sum(c * x ** (self.low + k) for k, c in enumerate(self.coeffs))
        return int(val) if val.denominator == 1 else val

    def normalized(self) -> LaurentPoly:
        """Representative up to +-t^k: lowest exponent 0, positive top coefficient."""
        if not self.coeffs:
            return self
        sign = -1 if self.coeffs[-1] < 0 else 1
        return LaurentPoly(0, tuple(sign * c for c in self.coeffs))

    def to_json(self) -> dict:
        return {"low": self.low, "coeffs": list(self.coeffs)}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            e = self.low + k
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            body += mono
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)


def geometric_sum(m: int) -> LaurentPoly:
    """1 + t + ... + t^(m-1)."""
    return LaurentPoly(0, (1,) * m)


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Quotient p / q in Z[t, t^-1]; raises InexactDivisionError otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    num = list(p.coeffs)
    den = q.coeffs
    if len(den) > len(num):
        raise InexactDivisionError(f"{q} does not divide {p}")
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = num[k + len(den) - 1]
        if top % lead:
            raise InexactDivisionError(f"{q} does not divide {p}")
        c = top // lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num):
        raise InexactDivisionError(f"{q} does not divide {p}")
    return LaurentPoly(p.low - q.low, tuple(quot))


LaurentMatrix = List[List[LaurentPoly]]


def laurent_identity(n: int) -> LaurentMatrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def det_laurent(A: LaurentMatrix) -> LaurentPoly:
    """Determinant by fraction-free (Bareiss) elimination over Z[t, t^-1].

    Every division in the recurrence is exact because the ring is an
    integral domain.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    M = [[_coerce(x) for x in row] for row in A]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if M[k][k].is_zero():
            # prefer the sparsest usable pivot row
            cands = [r for r in range(k + 1, n) if not M[r][k].is_zero()]
            if not cands:
                return ZERO
            r = min(cands, key=lambda r: len(M[r][k].coeffs))
            M[k], M[r] = M[r], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i = M[i]
            row_k = M[k]
            for j in range(k + 1, n):
                val = pivot * row_i[j] - mik * row_k[j]
                row_i[j] = exact_divide(val, prev) if prev != ONE else val
        prev = pivot
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d
