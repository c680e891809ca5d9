"""Element orders in the truncated rings R(Q_{4k}) / phi^(N+2) R(Q_{4k}).

The parameter N indexes the sphere quotient S^(4N+3)/Q_{4k}: its K-ring is
modeled by the quotient in which the powers phi, ..., phi^(N+1) survive and
phi^(N+2) is killed.  (Quotienting by phi^(N+1) instead would make phi
itself vanish at N = 0; the N = 0 column must reproduce the order 4k of phi
in R/phi^2 R.)

The ideal is encoded as the integer lattice spanned by phi^(N+2) * b over
the k+3 basis elements b; orders are read off the Smith normal form of that
(k+3) x (k+3) matrix.  The lattice has rank k+2 because phi vanishes only
on the identity class, so exactly one free direction survives.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .intmatrix import SmithForm, smith_normal_form
from .repring import GroupParams, RepElement, basis_elements, phi_element


@dataclass(frozen=True)
class TruncatedQuotient:
    params: GroupParams
    N: int
    lattice: tuple  # rows: phi^(N+2) * b in irreducible-basis coordinates
    snf: SmithForm

    @property
    def size(self) -> int:
        return self.params.basis_size


def truncated_quotient(n: int, N: int) -> TruncatedQuotient:
    if N < 0:
        raise ValueError("N must be >= 0")
    params = GroupParams(n)
    power = phi_element(params) ** (N + 2)
    rows = tuple(tuple((power * b).coeffs) for b in basis_elements(params))
    snf = smith_normal_form([list(r) for r in rows])
    return TruncatedQuotient(params, N, rows, snf)


def order_of(element: RepElement, q: TruncatedQuotient):
    """Least t >= 1 with t * element in the relation lattice; None if no such t.

    With U*M*V = D, the condition t*e in rowspace(M) becomes per-column
    divisibility of t * (e*V) by the diagonal of D.
    """
    if element.params != q.params:
        raise ValueError("element and quotient have different group parameters")
    size = q.size
    V = q.snf.V
    e = element.coeffs
    eV = [sum(e[i] * V[i][j] for i in range(size)) for j in range(size)]
    diag = q.snf.diagonal
    t = 1
    for j in range(size):
        d = diag[j] if j < len(diag) else 0
        a = eV[j]
        if d == 0:
            if a != 0:
                return None
        elif a:
            t = lcm(t, d // gcd(d, a))
    return t


def phi_order(n: int, N: int):
    q = truncated_quotient(n, N)
    return order_of(phi_element(q.params), q)


def torsion_order(q: TruncatedQuotient) -> int:
    """Product of the nonzero elementary divisors: the size of the torsion
    part of the quotient group."""
    out = 1
    for d in q.snf.diagonal:
        if d:
            out *= d
    return out


@dataclass(frozen=True)
class TableCell:
    n: int
    N: int
    order: int
    expected: int

    @property
    def match(self) -> bool:
        return self.order == self.expected

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "order": _pow2_str(self.order),
            "expected": _pow2_str(self.expected),
            "match": self.match,
        }


def _pow2_str(x) -> str:
    if x is None:
        return "infinite"
    if x > 0 and x & (x - 1) == 0:
        return f"2^{x.bit_length() - 1}"
    return str(x)


def corollary2_table(n_max: int, N_max: int):
    """order(phi) for 3 <= n <= n_max, 0 <= N <= N_max, with expected 2^(n+2N)."""
    if n_max < 3 or N_max < 0:
        raise ValueError("need n_max >= 3 and N_max >= 0")
    cells = []
    for n in range(3, n_max + 1):
        for N in range(N_max + 1):
            cells.append(TableCell(n, N, phi_order(n, N), 2 ** (n + 2 * N)))
    return cells
