"""The lens-space target ring Z[eta]/(eta^(2k) - 1) and the restriction map.

The cyclic subgroup generated by x in Q_{4k} induces a ring homomorphism
from R(Q_{4k}) onto this ring: 1 and eta1 go to 1, eta2 and eta3 go to
eta^k, and d_i goes to eta^i + eta^(-i).  In particular phi = d_1 - 2 maps
exactly onto w = eta + eta^(-1) - 2, and every presentation relation dies in
the image, as does g_{2k}(w).  Here the Adams identity
psi^i(w) = eta^i + eta^(-i) - 2 holds for every i >= 1, not only odd i.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .adams import psi_series
from .intmath import format_terms
from .kring import relations_for
from .report import Check, Report
from .repring import GroupParams, RepElement

ETA1, ETA2, ETA3 = 1, 2, 3


@dataclass(frozen=True)
class LensElement:
    """Element of Z[eta]/(eta^(2k) - 1), stored as 2k coefficients."""

    k: int
    coeffs: tuple

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if len(self.coeffs) != 2 * self.k:
            raise ValueError(f"expected {2 * self.k} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def _check(self, other: "LensElement"):
        if self.k != other.k:
            raise ValueError(f"mismatched parameters: k={self.k} vs k={other.k}")

    def __add__(self, other: "LensElement") -> "LensElement":
        self._check(other)
        return LensElement(self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LensElement") -> "LensElement":
        self._check(other)
        return LensElement(self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LensElement":
        return LensElement(self.k, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return LensElement(self.k, tuple(a * other for a in self.coeffs))
        if isinstance(other, LensElement):
            return lens_multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "LensElement":
        if e < 0:
            raise ValueError("negative powers are not defined here")
        acc = lens_one(self.k)
        for _ in range(e):
            acc = acc * self
        return acc

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LensElement":
        return cls(int(data["k"]), tuple(int(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        return format_terms(
            (c, "eta" if e == 1 else f"eta^{e}" if e else "")
            for e, c in enumerate(self.coeffs))


def lens_zero(k: int) -> LensElement:
    return LensElement(k, (0,) * (2 * k))


def lens_one(k: int) -> LensElement:
    return eta_power(k, 0)


def eta_power(k: int, e: int) -> LensElement:
    coeffs = [0] * (2 * k)
    coeffs[e % (2 * k)] = 1
    return LensElement(k, tuple(coeffs))


def w_element(k: int) -> LensElement:
    """w = eta + eta^(-1) - 2, the image of phi."""
    return eta_power(k, 1) + eta_power(k, -1) - 2 * lens_one(k)


def lens_multiply(a: LensElement, b: LensElement) -> LensElement:
    """Cyclic convolution: eta^(2k) = 1 is the one and only relation."""
    a._check(b)
    mod = 2 * a.k
    out = [0] * mod
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                out[(i + j) % mod] += x * y
    return LensElement(a.k, tuple(out))


def restrict(r: RepElement) -> LensElement:
    """Restriction along the cyclic subgroup generated by x."""
    k = r.params.k
    out = [0] * (2 * k)
    out[0] += r.coeffs[0] + r.coeffs[ETA1]
    out[k] += r.coeffs[ETA2] + r.coeffs[ETA3]
    for i in range(1, k):
        c = r.coeffs[3 + i]
        if c:
            out[i] += c
            out[2 * k - i] += c
    return LensElement(k, tuple(out))


def _evaluate_formal(fp: dict, k: int) -> LensElement:
    """Evaluate a formal polynomial in v1, v2, phi: v1 maps to 0, v2 to
    eta^k - 1, phi to w."""
    v2 = eta_power(k, k) - lens_one(k)
    w = w_element(k)
    acc = lens_zero(k)
    for (a, b, c), coeff in fp.items():
        if a >= 1:
            continue  # restrict(v1) = 0 kills the whole monomial
        acc = acc + coeff * (v2 ** b) * (w ** c)
    return acc


def verify_restriction_hom(n: int, trials: int = 25, seed: int = 0) -> bool:
    """restrict(a*b) = restrict(a)*restrict(b) on all basis pairs plus
    randomized virtual elements."""
    from .repring import basis_elements, multiply

    params = GroupParams(n)
    basis = basis_elements(params)
    for a in basis:
        for b in basis:
            if restrict(multiply(a, b)) != restrict(a) * restrict(b):
                return False
    rng = random.Random(seed)
    size = params.basis_size
    for _ in range(trials):
        a = RepElement(params, tuple(rng.randint(-9, 9) for _ in range(size)))
        b = RepElement(params, tuple(rng.randint(-9, 9) for _ in range(size)))
        if restrict(multiply(a, b)) != restrict(a) * restrict(b):
            return False
    return True


def verify_relations_vanish(n: int) -> Report:
    """Images of the presentation relations and of g_{2k} must vanish, and
    psi^i(w) must equal eta^i + eta^(-i) - 2 for 1 <= i <= 2k."""
    params = GroupParams(n)
    k = params.k
    rset = relations_for(n)
    checks = []
    for rel in rset.relations + (rset.relation3,):
        image = _evaluate_formal(rel.difference(), k)
        checks.append(Check(rel.label, image.is_zero()))
    checks.append(Check(f"g_{2 * k}(w) = 0",
                        psi_series(k + 1).evaluate(w_element(k))
                        == psi_series(k - 1).evaluate(w_element(k))))
    two = 2 * lens_one(k)
    w = w_element(k)
    for i in range(1, 2 * k + 1):
        expected = eta_power(k, i) + eta_power(k, -i) - two
        checks.append(Check(f"psi^{i}(w) = eta^{i} + eta^-{i} - 2",
                            psi_series(i).evaluate(w) == expected))
    return Report(f"lens-ring restriction, n={n}", tuple(checks))
