"""The A2 weight lattice of PGL3 and its finite and affine Weyl groups.

Weights are integer triples (a, b, c) with a + b + c = 0; the Borel is
lower-triangular, so dominant means a >= b >= c.  The finite Weyl group is
S3 permuting coordinates; the affine group is W x X acting through the
level-l dot action v(mu + l*nu + rho) - rho with rho = (1, 0, -1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Weight:
    """A point of the weight lattice {(a, b, c) : a + b + c = 0}."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a + self.b + self.c != 0:
            raise ValueError(f"not on the weight lattice: {(self.a, self.b, self.c)}")

    @classmethod
    def of(cls, coords) -> "Weight":
        a, b, c = coords
        return cls(int(a), int(b), int(c))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse the text form "a,b,c"."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        return cls.of(int(p) for p in parts)

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b, -self.c)

    def __mul__(self, n: int) -> "Weight":
        return Weight(n * self.a, n * self.b, n * self.c)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return self.a >= self.b >= self.c

    def is_antidominant(self) -> bool:
        return self.a <= self.b <= self.c

    def is_regular(self) -> bool:
        """No repeated coordinate, i.e. trivial stabilizer in W."""
        return self.a != self.b and self.b != self.c and self.a != self.c

    def dual(self) -> "Weight":
        """Highest weight of the dual module: -w0 applied to self.

        This is the involution the opposition automorphism induces on
        weights; it preserves dominance.
        """
        return Weight(-self.c, -self.b, -self.a)

    def dominant_representative(self) -> "Weight":
        """The unique dominant weight in the W-orbit."""
        return Weight.of(sorted(self.coords, reverse=True))

    def to_json(self) -> list[int]:
        return [self.a, self.b, self.c]

    def __str__(self):
        return f"{self.a},{self.b},{self.c}"


ZERO = Weight(0, 0, 0)
ALPHA1 = Weight(1, -1, 0)
ALPHA2 = Weight(0, 1, -1)
ALPHA0 = Weight(1, 0, -1)  # highest root alpha1 + alpha2
RHO = ALPHA0
TWO_RHO = Weight(2, 0, -2)


@dataclass(frozen=True)
class WeylElt:
    """An element of S3, stored as the image tuple (w(0), w(1), w(2))."""

    perm: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"not a permutation of (0, 1, 2): {self.perm}")

    @property
    def length(self) -> int:
        """Coxeter length = inversion count of the image tuple."""
        p = self.perm
        return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return WeylElt(tuple(self.perm[other.perm[i]] for i in range(3)))

    def inverse(self) -> "WeylElt":
        inv = [0, 0, 0]
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElt(tuple(inv))

    def __call__(self, lam: Weight) -> Weight:
        return act(self, lam)


IDENTITY = WeylElt((0, 1, 2))
W0 = WeylElt((2, 1, 0))  # longest element, reverses coordinates
WEYL_GROUP = tuple(WeylElt(p) for p in itertools.permutations((0, 1, 2)))


def act(w: WeylElt, lam: Weight) -> Weight:
    """Left action by coordinate permutation: (w.lam)_i = lam_{w^-1(i)}."""
    out = [0, 0, 0]
    src = lam.coords
    for i in range(3):
        out[w.perm[i]] = src[i]
    return Weight.of(out)


def is_dominant(lam: Weight) -> bool:
    return lam.is_dominant()


def sigma_weight(lam: Weight) -> Weight:
    """The duality twist on weights, lam -> -w0(lam)."""
    return lam.dual()


def delta(lam: Weight) -> int:
    """Least Coxeter length of a w taking the dominant weight lam antidominant.

    Computed by brute enumeration of all six group elements.
    """
    if not lam.is_dominant():
        raise ValueError(f"delta requires a dominant weight, got {lam}")
    return min(w.length for w in WEYL_GROUP if act(w, lam).is_antidominant())


@dataclass(frozen=True)
class AffineElt:
    """An element v x nu of the affine Weyl group W x X at a fixed odd level > 3."""

    finite: WeylElt
    translation: Weight
    level: int

    def __post_init__(self):
        check_level(self.level)

    def __mul__(self, other: "AffineElt") -> "AffineElt":
        # (v1 t_n1)(v2 t_n2) = (v1 v2) t_{v2^-1 n1 + n2}
        if self.level != other.level:
            raise ValueError("cannot compose affine elements at different levels")
        v2inv = other.finite.inverse()
        return AffineElt(
            self.finite * other.finite,
            act(v2inv, self.translation) + other.translation,
            self.level,
        )


def check_level(level: int) -> int:
    if level <= 3 or level % 2 == 0:
        raise ValueError(f"level must be an odd integer > 3, got {level}")
    return level


def dot(w: AffineElt, mu: Weight) -> Weight:
    """Level-l dot action: (v x nu) . mu = v(mu + l*nu + rho) - rho."""
    return act(w.finite, mu + w.level * w.translation + RHO) - RHO


def tilting_highest_weight(lam: Weight, level: int) -> Weight | None:
    """Dominant weight of the dot orbit of 0 under the coset attached to lam.

    For antidominant lam this is the highest weight of the block's tilting
    module, realized as the unique dominant member of
    {v(level*lam + rho) - rho : v in W}.  Returns None when level*lam + rho
    is not regular (cannot happen for odd level > 3, but the contract keeps
    the case explicit).
    """
    check_level(level)
    if not lam.is_antidominant():
        raise ValueError(f"expected an antidominant weight, got {lam}")
    shifted = level * lam + RHO
    if not shifted.is_regular():
        return None
    return shifted.dominant_representative() - RHO
