"""Characteristic-zero cohomology of line bundles on G/B for G = PGL3.

The dominant-chamber algorithm (rho-shift, sort, count inversions) computes
R Ind_B^G k_lambda exactly; Freudenthal's recursion produces full
T-characters.  Euler characteristics, the coroot-pairing vanishing rule and
the Serre-duality H^3 criterion are characteristic-free and stay available
in prime mode, where genuine module evaluation is refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .weights import ALPHA0, ALPHA1, ALPHA2, RHO, WEYL_GROUP, Weight, act

# Weights of u* for the lower-triangular Borel.
NILRADICAL_DUAL_WEIGHTS = (ALPHA1, ALPHA2, ALPHA0)

_POSITIVE_ROOTS = ((1, -1, 0), (0, 1, -1), (1, 0, -1))
_PERMS = tuple(w.perm for w in WEYL_GROUP)


class CharacteristicError(ValueError):
    """Raised when a characteristic-zero evaluation is requested in prime mode."""


def check_characteristic(char: int) -> int:
    """Validate a characteristic mode: 0, or a prime > 3."""
    if char == 0:
        return 0
    if char in (2, 3):
        raise ValueError("characteristic 2 and 3 are excluded")
    if char < 2 or any(char % d == 0 for d in range(2, int(char**0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime > 3, got {char}")
    return char


def require_char_zero(char: int, what: str) -> None:
    check_characteristic(char)
    if char != 0:
        raise CharacteristicError(f"{what} is only evaluated in characteristic zero")


class Character:
    """A virtual T-character: finite support with signed integer multiplicities.

    Genuine characters have all multiplicities positive.  Instances are
    treated as immutable once built.
    """

    __slots__ = ("mult",)

    def __init__(self, mult: dict[tuple[int, int, int], int] | None = None):
        self.mult = {k: v for k, v in (mult or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "Character":
        return cls()

    @property
    def dim(self) -> int:
        return sum(self.mult.values())

    def is_zero(self) -> bool:
        return not self.mult

    def __eq__(self, other):
        return isinstance(other, Character) and self.mult == other.mult

    def __hash__(self):
        return hash(frozenset(self.mult.items()))

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.mult)
        for k, v in other.mult.items():
            out[k] = out.get(k, 0) + v
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({k: -v for k, v in self.mult.items()})

    def dual(self) -> "Character":
        """Character of the dual module: every weight negated."""
        return Character({(-a, -b, -c): v for (a, b, c), v in self.mult.items()})

    def multiplicity(self, lam: Weight) -> int:
        return self.mult.get(lam.coords, 0)

    def support(self) -> list[Weight]:
        return [Weight.of(k) for k in sorted(self.mult)]

    def to_json(self) -> dict:
        # A uniform overall sign is factored out when one exists.
        signs = {v > 0 for v in self.mult.values()}
        sign = -1 if signs == {False} else 1
        entries = [
            {"weight": list(k), "mult": sign * v} for k, v in sorted(self.mult.items())
        ]
        return {"sign": sign, "dim": self.dim, "entries": entries}

    def __repr__(self):
        return f"Character({self.mult!r})"


def weyl_dim(mu: Weight) -> int:
    """Dimension of the Weyl module of dominant highest weight mu."""
    if not mu.is_dominant():
        raise ValueError(f"weyl_dim requires a dominant weight, got {mu}")
    a, b, c = mu.coords
    num = (a - b + 1) * (b - c + 1) * (a - c + 2)
    assert num % 2 == 0
    return num // 2


def bott(lam: Weight, char: int = 0) -> tuple[int, Weight] | None:
    """Borel-Weil-Bott: the single nonvanishing degree of H^*(lambda).

    Returns None when lambda + rho is singular, else (i, mu) meaning the
    cohomology is concentrated in degree i with highest weight mu.  The
    degree is the inversion count of the rho-shift, the weight its sorted
    form minus rho.
    """
    require_char_zero(char, "Borel-Weil-Bott")
    s = (lam + RHO).coords
    if len(set(s)) < 3:
        return None
    length = sum(1 for i in range(3) for j in range(i + 1, 3) if s[i] < s[j])
    mu = Weight.of(sorted(s, reverse=True)) - RHO
    return (length, mu)


def _dominant_below(mu: tuple[int, int, int]):
    """Dominant weights mu - m*alpha1 - n*alpha2, ordered by distance m + n."""
    a, b, c = mu
    p, q = a - b, b - c
    out = []
    for m in range(0, (2 * p + q) // 3 + 1):
        for n in range(max(0, 2 * m - p), (q + m) // 2 + 1):
            out.append((m + n, (a - m, b + m - n, c + n)))
    out.sort()
    return out


def _ip(x, y):
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]


@lru_cache(maxsize=None)
def _character_map(mu: tuple[int, int, int]) -> dict:
    """Full weight-multiplicity map of the irreducible with highest weight mu.

    Freudenthal's recursion on the dominant cone, then W-orbit expansion;
    multiplicities are W-invariant.  All arithmetic is exact.
    """
    dom_mult: dict[tuple[int, int, int], int] = {mu: 1}
    mu_rho = (mu[0] + 1, mu[1], mu[2] - 1)
    norm_mu = _ip(mu_rho, mu_rho)
    for _, nu in _dominant_below(mu):
        if nu == mu:
            continue
        total = 0
        for al in _POSITIVE_ROOTS:
            k = 1
            while True:
                x = (nu[0] + k * al[0], nu[1] + k * al[1], nu[2] + k * al[2])
                m = dom_mult.get(tuple(sorted(x, reverse=True)))
                if m is None:
                    break
                total += m * _ip(x, al)
                k += 1
        nu_rho = (nu[0] + 1, nu[1], nu[2] - 1)
        denom = norm_mu - _ip(nu_rho, nu_rho)
        assert denom > 0 and (2 * total) % denom == 0
        dom_mult[nu] = 2 * total // denom
    full: dict[tuple[int, int, int], int] = {}
    for nu, m in dom_mult.items():
        for p in _PERMS:
            full[(nu[p[0]], nu[p[1]], nu[p[2]])] = m
    return full


def character(mu: Weight, char: int = 0) -> Character:
    """T-character of the irreducible/Weyl module with highest weight mu."""
    require_char_zero(char, "irreducible character")
    if not mu.is_dominant():
        raise ValueError(f"character requires a dominant weight, got {mu}")
    return Character(_character_map(mu.coords))


def euler_char(lam: Weight) -> Character:
    """Alternating sum of ch H^i(lambda); valid in every characteristic.

    Found by enumerating W for an element making lambda + rho strictly
    dominant (a code path independent of bott's sort-and-count).
    """
    shifted = lam + RHO
    for w in WEYL_GROUP:
        img = act(w, shifted)
        if img.a > img.b > img.c:
            ch = character(img - RHO)
            return ch if w.length % 2 == 0 else -ch
    return Character.zero()


def forced_vanishing(lam: Weight) -> bool:
    """True when lambda pairs to -1 with a simple coroot, killing R Ind in
    all characteristics."""
    return lam.a - lam.b == -1 or lam.b - lam.c == -1


def h3_possible(lam: Weight) -> bool:
    """Serre-duality criterion: H^3(lambda) can be nonzero only when
    lambda = w0(mu) - 2*rho for a dominant mu, i.e. (c-2, b, a+2) dominant."""
    return Weight(lam.c - 2, lam.b, lam.a + 2).is_dominant()


def sym_nilradical_weights(n: int) -> list[Weight]:
    """Weights of Sym^n(u*), with multiplicity."""
    out = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            out.append(i * ALPHA1 + j * ALPHA2 + k * ALPHA0)
    return out


def aj_euler(lam: Weight, n: int) -> Character:
    """Degree-2n graded Euler character of the induced sheaf attached to lam.

    This is the alternating character of R Ind_B^G(Sym^n(u*) (x) k_lambda),
    computed weight by weight; at lam = 0 it gives the degree-2n piece of
    the nilpotent-cone coordinate ring.
    """
    if n < 0:
        raise ValueError("symmetric-power degree must be nonnegative")
    total = Character.zero()
    for nu in sym_nilradical_weights(n):
        total = total + euler_char(lam + nu)
    return total


def decompose_into_weyl(ch: Character) -> list[tuple[Weight, int]]:
    """Write a character as a nonnegative sum of Weyl characters.

    Peels highest weights greedily; raises if a negative coefficient
    appears, so callers can rely on the result being a genuine
    good-filtration multiset.
    """
    rest = dict(ch.mult)
    out: list[tuple[Weight, int]] = []
    while rest:
        top = max(rest, key=lambda k: (k[0] - k[2], k))
        mu = Weight.of(top)
        if not mu.is_dominant():
            raise ValueError(f"maximal weight {mu} is not dominant")
        m = rest[top]
        if m <= 0:
            raise ValueError(f"negative multiplicity {m} at {mu}")
        out.append((mu, m))
        for k, v in _character_map(top).items():
            r = rest.get(k, 0) - m * v
            if r:
                rest[k] = r
            else:
                rest.pop(k, None)
    out.sort(key=lambda t: t[0].coords, reverse=True)
    return out
