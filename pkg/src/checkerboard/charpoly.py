"""Characteristic polynomials and exact eigenvalue sign counts.

The inertia of a Hermitian matrix is computed by root counting on its
characteristic polynomial with Sturm chains.  Multiple eigenvalues are
handled by descending the gcd chain p, gcd(p, p'), gcd(gcd, gcd'), ...:
an eigenvalue of multiplicity m contributes one distinct root to each of
the first m levels, so summing distinct-root counts over the chain gives
counts with multiplicity.  This avoids any pivoting edge cases that a
congruence decomposition would hit on the singular rank-4 matrices that
appear throughout this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Sequence

from .errors import DimensionError
from .matrices import GMat, _common_denominator, _lift, require_hermitian


@dataclass(frozen=True)
class Inertia:
    """Eigenvalue sign counts (negative, zero, positive) of a Hermitian matrix."""

    n_neg: int
    n_zero: int
    n_pos: int

    def dim(self) -> int:
        return self.n_neg + self.n_zero + self.n_pos


class RealPoly:
    """Polynomial with rational coefficients, stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction]):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RealPoly is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RealPoly":
        return RealPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other):
        if not isinstance(other, RealPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RealPoly({list(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# Characteristic polynomial via the Faddeev-LeVerrier recursion on a
# common-denominator Gaussian-integer lift.  All divisions are exact.


def _zi_matmul(a, b, n):
    out = []
    for r in range(n):
        ar = a[r]
        row = []
        for c in range(n):
            sre = 0
            sim = 0
            for k in range(n):
                x, y = ar[k]
                u, v = b[k][c]
                sre += x * u - y * v
                sim += x * v + y * u
            row.append((sre, sim))
        out.append(row)
    return out


def char_poly(m: GMat) -> RealPoly:
    """Coefficients of det(lambda*I - m) for Hermitian m, lowest degree first."""
    require_hermitian(m, "char_poly input")
    n = m.rows
    if n == 0:
        return RealPoly([Fraction(1)])
    d = _common_denominator(m)
    a = _lift(m, d)
    # b starts as the identity; c_k collects the lifted coefficients.
    b = [[(1, 0) if r == c else (0, 0) for c in range(n)] for r in range(n)]
    cs = []
    for k in range(1, n + 1):
        ab = _zi_matmul(a, b, n)
        tr_re = sum(ab[i][i][0] for i in range(n))
        tr_im = sum(ab[i][i][1] for i in range(n))
        if tr_im:
            raise ArithmeticError("non-real trace in char_poly of Hermitian matrix")
        ck, rem = divmod(-tr_re, k)
        if rem:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier recursion")
        cs.append(ck)
        if k < n:
            for i in range(n):
                b[i] = [(x + (ck if i == j else 0), y) for j, (x, y) in enumerate(ab[i])]
    # det(lambda I - m) = sum_j c_{n-j} / d^{n-j} * lambda^j with c_0 = 1.
    coeffs = [Fraction(cs[n - 1 - j], d ** (n - j)) for j in range(n)] + [Fraction(1)]
    return RealPoly(coeffs)


# ---------------------------------------------------------------------------
# Sturm machinery on primitive integer polynomials.


def _primitive(coeffs):
    """Scale rational coefficients by a positive constant to primitive ints."""
    den = 1
    for c in coeffs:
        den = _int_lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = _int_gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _poly_rem(a, b):
    """Remainder of a by b over the rationals; inputs/outputs lowest-first int lists."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    while len(r) - 1 >= db and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < db:
            break
        f = r[-1] / lb
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] -= f * bc
        r.pop()
    while r and not r[-1]:
        r.pop()
    return _primitive(r) if r else []


def _sturm_chain(p):
    """Canonical Sturm chain of an integer polynomial (primitive, positive rescaling)."""
    chain = [p]
    dp = [k * c for k, c in enumerate(p)][1:]
    if dp:
        chain.append(_primitive([Fraction(c) for c in dp]))
    while len(chain[-1]) - 1 > 0:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)


def _count_interval_roots(p):
    """Distinct real roots of integer poly p in (-inf, 0) and (0, +inf); needs p(0) != 0."""
    chain = _sturm_chain(p)
    at_neg_inf = [_sign(q[-1]) * (-1) ** (len(q) - 1) for q in chain]
    at_zero = [_sign(q[0]) for q in chain]
    at_pos_inf = [_sign(q[-1]) for q in chain]
    v_neg = _variations(at_neg_inf)
    v_zero = _variations(at_zero)
    v_pos = _variations(at_pos_inf)
    return v_neg - v_zero, v_zero - v_pos, chain


def inertia_from_char_poly(p: RealPoly, dim: int) -> Inertia:
    """Sign counts of the real roots of a monic characteristic polynomial."""
    coeffs = list(p.coeffs)
    n_zero = 0
    while n_zero < len(coeffs) and not coeffs[n_zero]:
        n_zero += 1
    reduced = coeffs[n_zero:]
    n_neg = n_pos = 0
    if len(reduced) > 1:
        cur = _primitive(reduced)
        # Descend the gcd chain; each level counts every remaining distinct root once.
        while len(cur) - 1 > 0:
            neg, pos, chain = _count_interval_roots(cur)
            n_neg += neg
            n_pos += pos
            last = chain[-1]
            if len(last) - 1 == 0:
                break
            cur = last if last[-1] > 0 else [-c for c in last]
    if n_neg + n_zero + n_pos != dim:
        raise ArithmeticError(
            "root count does not match dimension; input was not Hermitian-like"
        )
    return Inertia(n_neg, n_zero, n_pos)


def inertia(m: GMat) -> Inertia:
    """Exact (negative, zero, positive) eigenvalue counts of a Hermitian matrix."""
    if not m.is_square():
        raise DimensionError("inertia of non-square matrix")
    return inertia_from_char_poly(char_poly(m), m.rows)
