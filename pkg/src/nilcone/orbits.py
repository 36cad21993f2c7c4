"""Exact linear algebra for the three nilpotent orbits of PGL3.

The Lie algebra is realized as gl3 modulo scalars (characteristic != 3),
with the eight-element weight basis: six off-diagonal matrix units and two
diagonal trace-zero combinations.  Each orbit carries a representative, an
associated cocharacter grading the algebra, and the dimension profiles
g(k) and g^x(k) that the paper's identities constrain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .weights import Weight

Matrix = tuple[tuple[int, ...], ...]

PARTITIONS = ((1, 1, 1), (2, 1), (3,))


def parse_partition(text: str) -> tuple[int, ...]:
    parts = tuple(int(p) for p in text.split(","))
    if parts not in PARTITIONS:
        raise ValueError(f"not a partition of 3: {text!r}")
    return parts


def _unit(i: int, j: int) -> Matrix:
    return tuple(
        tuple(1 if (r, c) == (i, j) else 0 for c in range(3)) for r in range(3)
    )


def _add(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(x[r][c] + y[r][c] for c in range(3)) for r in range(3))


def _mul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(
        tuple(sum(x[r][k] * y[k][c] for k in range(3)) for c in range(3))
        for r in range(3)
    )


def bracket(x: Matrix, y: Matrix) -> Matrix:
    xy, yx = _mul(x, y), _mul(y, x)
    return tuple(tuple(xy[r][c] - yx[r][c] for c in range(3)) for r in range(3))


def trace(x: Matrix) -> int:
    return x[0][0] + x[1][1] + x[2][2]


def trace_form(x: Matrix, y: Matrix) -> int:
    """The invariant bilinear form B(x, y) = tr(xy), nondegenerate mod scalars."""
    return trace(_mul(x, y))


# Basis of sl3 (= pgl3 in characteristic 0): off-diagonal units carry
# cocharacter weight e_i - e_j; the two diagonal elements weight 0.
_BASIS: tuple[tuple[Matrix, tuple[int, int] | None], ...] = (
    (_unit(0, 1), (0, 1)),
    (_unit(0, 2), (0, 2)),
    (_unit(1, 0), (1, 0)),
    (_unit(1, 2), (1, 2)),
    (_unit(2, 0), (2, 0)),
    (_unit(2, 1), (2, 1)),
    (_add(_unit(0, 0), tuple(tuple(-v for v in r) for r in _unit(1, 1))), None),
    (_add(_unit(1, 1), tuple(tuple(-v for v in r) for r in _unit(2, 2))), None),
)

BASIS: tuple[Matrix, ...] = tuple(m for m, _ in _BASIS)


def basis_weights(cochar: tuple[int, int, int]) -> tuple[int, ...]:
    """Ad-weight of each basis element under conjugation by diag(z^e1, z^e2, z^e3)."""
    out = []
    for _, pos in _BASIS:
        out.append(0 if pos is None else cochar[pos[0]] - cochar[pos[1]])
    return tuple(out)


def rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    rows = [row[:] for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1, 1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * p for v, p in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _flatten(m: Matrix) -> list[Fraction]:
    return [Fraction(m[r][c]) for r in range(3) for c in range(3)]


@dataclass(frozen=True)
class OrbitLinearData:
    partition: tuple[int, ...]
    representative: Matrix
    cocharacter: tuple[int, int, int]
    dim_c: int
    codim_c: int
    g_weights: dict[int, int]
    gx_weights: dict[int, int]


_ORBIT_TABLE = {
    (1, 1, 1): (tuple(tuple(0 for _ in range(3)) for _ in range(3)), (0, 0, 0)),
    (2, 1): (_unit(2, 0), (-1, 0, 1)),
    (3,): (_add(_unit(1, 0), _unit(2, 1)), (-2, 0, 2)),
}


def weight_spaces(d: tuple[int, ...]) -> tuple[dict[int, int], dict[int, int]]:
    """Dimension profiles of g(k) and g^x(k) = g(k) * ker ad(x).

    The centralizer is cut out exactly: for each weight k, the kernel of
    ad(x): g(k) -> g(k+2) on the weight-homogeneous basis.
    """
    x, cochar = _ORBIT_TABLE[tuple(d)]
    wts = basis_weights(cochar)
    g: dict[int, int] = {}
    for w in wts:
        g[w] = g.get(w, 0) + 1
    gx: dict[int, int] = {}
    for k in sorted(g):
        block = [BASIS[i] for i in range(8) if wts[i] == k]
        rows = [_flatten(bracket(x, b)) for b in block]
        ker = len(block) - rational_rank(rows)
        if ker:
            gx[k] = ker
    return g, gx


def orbit_data(d) -> OrbitLinearData:
    d = tuple(d)
    if d not in _ORBIT_TABLE:
        raise ValueError(f"not a partition of 3: {d}")
    x, cochar = _ORBIT_TABLE[d]
    g, gx = weight_spaces(d)
    dim_c = 8 - sum(gx.values())
    return OrbitLinearData(
        partition=d,
        representative=x,
        cocharacter=cochar,
        dim_c=dim_c,
        codim_c=6 - dim_c,
        g_weights=g,
        gx_weights=gx,
    )


def check_dim_identity(d) -> bool:
    """sum_k k * dim g^x(k) = dim C."""
    data = orbit_data(d)
    return sum(k * v for k, v in data.gx_weights.items()) == data.dim_c


def check_pairing_symmetry(d) -> bool:
    """dim g(k) = dim g(-k) for all k."""
    g = orbit_data(d).g_weights
    return all(g.get(-k, 0) == v for k, v in g.items())


def canonical_weight(d) -> int:
    """Grading weight of the top exterior power of the orbit's cotangent
    space: 4 dim C + sum (k-2) dim g(k) - sum (k-2) dim g^x(k).

    Contract: equals dim C, so the canonical bundle is O_C<-dim C>.
    """
    data = orbit_data(d)
    return (
        4 * data.dim_c
        + sum((k - 2) * v for k, v in data.g_weights.items())
        - sum((k - 2) * v for k, v in data.gx_weights.items())
    )


def symplectic_check(d) -> bool:
    """The alternating form (u, v) -> tr(x [u, v]) must have radical exactly
    the centralizer, i.e. rank equal to dim C."""
    data = orbit_data(d)
    x = data.representative
    gram = [
        [Fraction(trace_form(x, bracket(u, v))) for v in BASIS] for u in BASIS
    ]
    return rational_rank(gram) == data.dim_c


def centralizer_recursion_check(d) -> bool:
    """Downward recursion dim g(k) = sum_{j>=0} dim g^x(k+2j) for k >= 0."""
    data = orbit_data(d)
    top = max(data.g_weights) + 2
    for k in range(0, top + 1):
        lhs = data.g_weights.get(k, 0)
        rhs = sum(
            v for w, v in data.gx_weights.items() if w >= k and (w - k) % 2 == 0
        )
        if lhs != rhs:
            return False
    return True


def restrict_line_bundle(lam: Weight) -> tuple[int, int]:
    """Restriction data of the middle-orbit line bundle for weight (a, b, c):
    the torus character b and the grading shift a - c."""
    return (lam.b, lam.a - lam.c)


def orbit_report(d) -> dict:
    data = orbit_data(d)
    return {
        "partition": list(data.partition),
        "dimC": data.dim_c,
        "codimC": data.codim_c,
        "cocharacter": list(data.cocharacter),
        "g": {str(k): v for k, v in sorted(data.g_weights.items())},
        "gx": {str(k): v for k, v in sorted(data.gx_weights.items())},
        "checks": {
            "dim_identity": check_dim_identity(d),
            "pairing_symmetry": check_pairing_symmetry(d),
            "symplectic_rank": symplectic_check(d),
            "canonical_weight_equals_dimC": canonical_weight(d) == data.dim_c,
            "centralizer_recursion": centralizer_recursion_check(d),
        },
    }
