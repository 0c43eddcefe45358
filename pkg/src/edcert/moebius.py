"""Right action of nonsingular 2x2 rational matrices on polynomials.

A degree-n polynomial A corresponds to the binary form sum a_i x^i y^(n-i);
a matrix g = [[a, b], [c, d]] acts by the substitution (x, y) -> (ax+b, cx+d)
on that form, i.e.

    A(x) g = (cx + d)^n A((ax + b) / (cx + d)).

The result keeps formal degree n even when its actual degree drops, which is
what makes this a genuine right action on formal-degree-n polynomials.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import Rational
from .poly import FormalPoly, _coerce


class MatrixShape(enum.Enum):
    """Zero-pattern classification of a nonsingular 2x2 matrix.

    The four degenerate shapes are the matrices with a vanishing entry:
    upper/lower triangular and their compositions with the coordinate swap.
    A matrix with all four entries nonzero is FULL.
    """

    UPPER = "upper"
    LOWER = "lower"
    UPPER_SWAP = "upper-swap"
    LOWER_SWAP = "lower-swap"
    FULL = "full"


@dataclass(frozen=True)
class Mat2:
    """Nonsingular 2x2 rational matrix [[a, b], [c, d]]."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))
        if self.det == 0:
            raise ValueError("matrix is singular")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def swap(cls) -> "Mat2":
        """The coordinate swap [[0, 1], [1, 0]]; acting by it reverses coefficients."""
        return cls(0, 1, 1, 0)

    @classmethod
    def shear(cls, t: Rational | int) -> "Mat2":
        """Upper shear [[1, t], [0, 1]]; acting by it is the Taylor shift by t."""
        return cls(1, t, 0, 1)

    def compose(self, other: "Mat2") -> "Mat2":
        """Matrix product self * other; determinants multiply."""
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self) -> "Mat2":
        det = self.det
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def shape(self) -> MatrixShape:
        """Which of the degenerate zero patterns (if any) this matrix has.

        Checked in the order upper, lower, upper-swap, lower-swap, so a
        diagonal matrix reports UPPER and an antidiagonal one UPPER_SWAP.
        """
        if self.c == 0:
            return MatrixShape.UPPER
        if self.b == 0:
            return MatrixShape.LOWER
        if self.d == 0:
            return MatrixShape.UPPER_SWAP
        if self.a == 0:
            return MatrixShape.LOWER_SWAP
        return MatrixShape.FULL


def _linear_power_table(u: Fraction, w: Fraction, n: int) -> list[list[Fraction]]:
    """Coefficient vectors of (u*x + w)^k for k = 0..n."""
    table = [[Fraction(1)]]
    for _ in range(n):
        prev = table[-1]
        nxt = [Fraction(0)] * (len(prev) + 1)
        for i, c in enumerate(prev):
            nxt[i] += c * w
            nxt[i + 1] += c * u
        table.append(nxt)
    return table


def act(A: FormalPoly, g: Mat2) -> FormalPoly:
    """A(x) g = (cx+d)^n A((ax+b)/(cx+d)) at formal degree n = deg_f(A).

    Expands sum a_i (ax+b)^i (cx+d)^(n-i) with precomputed binomial rows;
    exact O(n^3) arithmetic.
    """
    n = A.formal_degree
    up = _linear_power_table(g.a, g.b, n)
    lo = _linear_power_table(g.c, g.d, n)
    out = [Fraction(0)] * (n + 1)
    for i, coeff in enumerate(A.coeffs):
        if coeff == 0:
            continue
        left, right = up[i], lo[n - i]
        for j, x in enumerate(left):
            if x == 0:
                continue
            for k, y in enumerate(right):
                if y != 0:
                    out[j + k] += coeff * x * y
    return FormalPoly(tuple(out))
