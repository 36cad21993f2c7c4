"""Dense polynomials and rational functions with exact rational coefficients.

Just enough arithmetic for Hilbert-series and Euler-series bookkeeping:
ring operations, exact equality by cross-multiplication, and power-series
expansion of p/q with q(0) != 0.
"""

from __future__ import annotations

from fractions import Fraction


class Polynomial:
    """Coefficient list, index = degree; normalized to drop trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] - other[k] for k in range(n)])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __pow__(self, n: int) -> "Polynomial":
        out = Polynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def reversed(self, degree: int) -> "Polynomial":
        """x^degree * p(1/x); requires deg p <= degree."""
        if self.degree > degree:
            raise ValueError("reversal degree smaller than polynomial degree")
        out = [Fraction(0)] * (degree + 1)
        for k, c in enumerate(self.coeffs):
            out[degree - k] = c
        return Polynomial(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


class RationalFunction:
    """A quotient of polynomials; equality is exact cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def __eq__(self, other):
        return isinstance(other, RationalFunction) and (
            self.num * other.den == other.num * self.den
        )

    def __hash__(self):
        raise TypeError("unhashable (no canonical form kept)")

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)

    def series(self, upto: int) -> list[Fraction]:
        """Power-series coefficients 0..upto; denominator must be a unit at 0."""
        d0 = self.den[0]
        if d0 == 0:
            raise ValueError("denominator vanishes at 0")
        out = []
        for k in range(upto + 1):
            acc = self.num[k]
            for j in range(1, k + 1):
                acc -= self.den[j] * out[k - j]
            out.append(acc / d0)
        return out
