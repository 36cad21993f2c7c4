"""Independent brute-force referees for the fast implementations.

These deliberately avoid the production code paths: characters are counted
tableau by tableau, and the coordinate-ring Hilbert series comes from its
complete-intersection presentation.
"""

from __future__ import annotations

from fractions import Fraction

from .series import RationalFunction, Polynomial
from .weights import Weight


def ssyt_character(mu: Weight) -> dict[tuple[int, int, int], int]:
    """Weight multiplicities of L(mu) by enumerating semistandard tableaux.

    Shape (a-c, b-c, 0), entries in {1, 2, 3}; a tableau of content
    (c1, c2, c3) contributes to the weight (c1, c2, c3) + (c, c, c).
    """
    if not mu.is_dominant():
        raise ValueError(f"dominant weight required, got {mu}")
    a, b, c = mu.coords
    r1, r2 = a - c, b - c
    counts: dict[tuple[int, int, int], int] = {}

    def rows(length):
        # weakly increasing rows over {1,2,3}, encoded by content
        for n1 in range(length + 1):
            for n2 in range(length - n1 + 1):
                yield (n1, n2, length - n1 - n2)

    for top in rows(r1):
        for bot in rows(r2):
            if _columns_strict(top, bot, r2):
                content = (top[0] + bot[0], top[1] + bot[1], top[2] + bot[2])
                w = (content[0] + c, content[1] + c, content[2] + c)
                counts[w] = counts.get(w, 0) + 1
    return counts


def _columns_strict(top, bot, r2):
    # Column j of the top row holds value 1 for j < n1, 2 for j < n1+n2, else 3;
    # strictness means bot[j] > top[j] for j < r2.
    def value(row, j):
        if j < row[0]:
            return 1
        if j < row[0] + row[1]:
            return 2
        return 3

    return all(value(bot, j) > value(top, j) for j in range(r2))


def ssyt_dimension(mu: Weight) -> int:
    return sum(ssyt_character(mu).values())


def coordinate_ring_hilbert_series() -> RationalFunction:
    """Hilbert series of the nilpotent-cone coordinate ring in the variable t,
    from the complete intersection: (1 - t^4)(1 - t^6) / (1 - t^2)^8."""
    one = Polynomial([1])
    t2 = Polynomial([0, 0, 1])
    t4 = Polynomial([0, 0, 0, 0, 1])
    t6 = Polynomial([0] * 6 + [1])
    num = (one - t4) * (one - t6)
    den = (one - t2) ** 8
    return RationalFunction(num, den)


def coordinate_ring_dims(max_grading: int) -> dict[int, int]:
    """Graded dimensions {2n: dim} of the coordinate ring up to max_grading."""
    coeffs = coordinate_ring_hilbert_series().series(max_grading)
    out = {}
    for m in range(0, max_grading + 1, 2):
        d = coeffs[m]
        assert d.denominator == 1
        out[m] = int(d)
    return out


def geometric_sum_of_cubic(values: list[Fraction | int]) -> RationalFunction:
    """Closed form of sum_{n>=0} f(n) x^n for the cubic f interpolating
    values f(0..3), via the finite-difference expansion
    sum_j D^j f(0) x^j / (1-x)^{j+1}."""
    diffs = [Fraction(v) for v in values]
    deltas = []
    for _ in range(4):
        deltas.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    one_minus_x = Polynomial([1, -1])
    num = Polynomial([0])
    for j, d in enumerate(deltas):
        term = Polynomial([0] * j + [d]) * one_minus_x ** (3 - j)
        num = num + term
    return RationalFunction(num, one_minus_x**4)
