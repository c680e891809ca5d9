"""Exact integer arithmetic substrate.

Binomial coefficients, 2-adic valuations, the Chebyshev-style recurrence
t_0 = 2, t_1 = c, t_{i+1} = c*t_i - t_{i-1} (so that t_i(z + 1/z) = z^i + z^-i),
and cyclotomic integers for a power-of-two root of unity.  Everything is
pure and exact; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binomial(n: int, r: int) -> int:
    """C(n, r) with the convention that r outside [0, n] gives 0."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if r < 0 or r > n:
        return 0
    return comb(n, r)


def two_adic_valuation(n: int) -> int:
    """Largest e such that 2**e divides n.  n must be nonzero."""
    if n == 0:
        raise ValueError("2-adic valuation of 0 is infinite")
    return (n & -n).bit_length() - 1


def format_terms(terms) -> str:
    """Join (coefficient, symbol) pairs into '3*x^2 - y + 4' style text.

    A pair with an empty symbol is a plain constant.  Zero coefficients are
    skipped; an empty result renders as '0'.
    """
    out = []
    for coeff, sym in terms:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if not sym:
            body = str(mag)
        elif mag == 1:
            body = sym
        else:
            body = f"{mag}*{sym}"
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


def _trim(coeffs) -> tuple:
    coeffs = tuple(coeffs)
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return coeffs[:end]


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x**i."""

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "IntPoly":
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def compose(self, other: "IntPoly") -> "IntPoly":
        """self(other(x)), by Horner's scheme."""
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + IntPoly.of(c)
        return acc

    def __call__(self, x):
        """Evaluate at x (any value supporting + and *, e.g. int, Fraction)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = [(c, "c" if i == 1 else f"c^{i}" if i else "")
                 for i, c in enumerate(self.coeffs)]
        return format_terms(reversed(terms))


def chebyshev_t(i: int) -> IntPoly:
    """t_i with t_0 = 2, t_1 = c, t_{i+1} = c*t_i - t_{i-1}.

    These satisfy t_i(z + 1/z) = z^i + z^-i, which is what makes them the
    independent oracle for the Adams-operation polynomials.
    """
    if i < 0:
        raise ValueError("chebyshev_t requires i >= 0")
    prev, cur = IntPoly.of(2), IntPoly.of(0, 1)
    if i == 0:
        return prev
    x = IntPoly.of(0, 1)
    for _ in range(i - 1):
        prev, cur = cur, x * cur - prev
    return cur


@dataclass(frozen=True)
class CyclotomicInt:
    """Element of Z[zeta] with zeta a primitive 2k-th root of unity.

    Stored as k integer coefficients of 1, zeta, ..., zeta^(k-1); since 2k is
    a power of two in every use here, zeta^k = -1 is the one and only
    reduction rule and the representation is canonical.
    """

    k: int
    coeffs: tuple

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if len(self.coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def zero(cls, k: int) -> "CyclotomicInt":
        return cls(k, (0,) * k)

    @classmethod
    def one(cls, k: int) -> "CyclotomicInt":
        return cls.from_int(k, 1)

    @classmethod
    def from_int(cls, k: int, value: int) -> "CyclotomicInt":
        return cls(k, (value,) + (0,) * (k - 1))

    @classmethod
    def root_power(cls, k: int, e: int) -> "CyclotomicInt":
        """zeta**e, reduced by zeta^(k+j) = -zeta^j."""
        e %= 2 * k
        coeffs = [0] * k
        if e < k:
            coeffs[e] = 1
        else:
            coeffs[e - k] = -1
        return cls(k, tuple(coeffs))

    def _check(self, other: "CyclotomicInt"):
        if self.k != other.k:
            raise ValueError(f"mismatched cyclotomic parameters: {self.k} != {other.k}")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.k, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.k, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        self._check(other)
        k = self.k
        out = [0] * k
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                idx = i + j
                if idx < k:
                    out[idx] += a * b
                else:
                    out[idx - k] -= a * b
        return CyclotomicInt(k, tuple(out))

    __rmul__ = __mul__

    def conj(self) -> "CyclotomicInt":
        """Complex conjugation zeta -> zeta^-1 = -zeta^(k-1)."""
        k = self.k
        out = [0] * k
        out[0] = self.coeffs[0]
        for j in range(1, k):
            out[k - j] -= self.coeffs[j]
        return CyclotomicInt(k, tuple(out))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        terms = [(c, "z" if j == 1 else f"z^{j}" if j else "")
                 for j, c in enumerate(self.coeffs)]
        return format_terms(terms)


def cyclo_mul(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    """Product in Z[zeta]; both factors must share the same k."""
    return a * b
