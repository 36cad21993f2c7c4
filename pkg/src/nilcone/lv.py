"""The Lusztig-Vogan correspondence for PGL3 and its consistency auditor.

The printed four-case rule for the middle orbit has two negative rows whose
outputs leave the weight lattice (coordinate sum -2); duality forces the
corrected form lambda(-a) = dual(lambda(a)), which is the default here.
The zero-orbit row, taken unrestricted, collides with the other rows; the
forward map resolves this by row priority and the audit keeps the
discrepancies as data instead of hiding them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .weights import TWO_RHO, Weight

VERBATIM = "verbatim"
CORRECTED = "corrected"
_MODES = (VERBATIM, CORRECTED)

ORBIT_REGULAR = (3,)
ORBIT_MIDDLE = (2, 1)
ORBIT_ZERO = (1, 1, 1)


@dataclass(frozen=True)
class SimpleLabel:
    """(orbit, equivariant irreducible) label of a simple object.

    rep is None for the regular orbit, an integer torus character for the
    middle orbit, and a dominant Weight for the zero orbit.
    """

    orbit: tuple[int, ...]
    rep: int | Weight | None = None

    def __post_init__(self):
        if self.orbit == ORBIT_REGULAR:
            ok = self.rep is None
        elif self.orbit == ORBIT_MIDDLE:
            ok = isinstance(self.rep, int)
        elif self.orbit == ORBIT_ZERO:
            ok = isinstance(self.rep, Weight) and self.rep.is_dominant()
        else:
            ok = False
        if not ok:
            raise ValueError(f"mismatched label {self.orbit} / {self.rep!r}")

    def to_json(self) -> dict:
        rep = self.rep.to_json() if isinstance(self.rep, Weight) else self.rep
        return {"orbit": list(self.orbit), "rep": rep}

    def __str__(self):
        if self.orbit == ORBIT_REGULAR:
            return "([3], unit)"
        if self.orbit == ORBIT_MIDDLE:
            return f"([2,1], a={self.rep})"
        return f"([1,1,1], L({self.rep}))"


def _check_mode(mode: str) -> str:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
    return mode


def _middle_row(a: int, mode: str) -> tuple[int, int, int]:
    # Printed rows for a >= 0; for a < 0 verbatim applies the printed
    # negative rows literally while corrected returns dual(row(-a)).
    if a >= 0:
        x, r = divmod(a, 2)
        if r == 0:
            return (x + 1, x, -2 * x - 1)
        return (x + 1, x + 1, -2 * x - 2)
    if mode == CORRECTED:
        p, q, r = _middle_row(-a, mode)
        return (-r, -q, -p)
    if a % 2 == 0:
        x = a // 2
        return (-2 * x - 1, x, x - 1)
    x = (a - 1) // 2
    return (-2 * x - 2, x, x)


def lv_backward(label: SimpleLabel, mode: str = CORRECTED) -> tuple[int, int, int]:
    """Dominant-weight side of the table for one label.

    Returned as a raw coordinate triple: verbatim mode reproduces the
    printed arithmetic even where it leaves the lattice.
    """
    _check_mode(mode)
    if label.orbit == ORBIT_REGULAR:
        return (0, 0, 0)
    if label.orbit == ORBIT_MIDDLE:
        return _middle_row(label.rep, mode)
    mu = label.rep
    return (mu.a - 2, mu.b, mu.c + 2)


def lv_forward(lam: Weight) -> SimpleLabel:
    """Row-priority reading of the table, right to left: the regular orbit
    first, then the middle-orbit patterns, then the zero-orbit fallback."""
    if not lam.is_dominant():
        raise ValueError(f"lv_forward requires a dominant weight, got {lam}")
    a, b, c = lam.coords
    if (a, b, c) == (0, 0, 0):
        return SimpleLabel(ORBIT_REGULAR)
    if a == b + 1 and b >= 0:
        return SimpleLabel(ORBIT_MIDDLE, 2 * b)
    if a == b and b >= 1:
        return SimpleLabel(ORBIT_MIDDLE, 2 * b - 1)
    if b == c and b <= -1 and a == -2 * b:
        return SimpleLabel(ORBIT_MIDDLE, 2 * b + 1)
    if b == c + 1 and b <= -1 and a == -2 * b + 1:
        return SimpleLabel(ORBIT_MIDDLE, 2 * b)
    return SimpleLabel(ORBIT_ZERO, lam + TWO_RHO)


def lv_canonical_shift(orbit) -> int:
    """Half the codimension of the orbit closure: the grading twist that
    normalizes the simple object attached to a dominant weight."""
    shifts = {ORBIT_REGULAR: 0, ORBIT_MIDDLE: 1, ORBIT_ZERO: 3}
    orbit = tuple(orbit)
    if orbit not in shifts:
        raise ValueError(f"not a partition of 3: {orbit}")
    return shifts[orbit]


@dataclass
class AuditReport:
    mode: str
    radius: int
    off_lattice: list[dict] = field(default_factory=list)
    non_dominant: list[dict] = field(default_factory=list)
    collisions: list[dict] = field(default_factory=list)
    roundtrip_failures: list[dict] = field(default_factory=list)

    def is_clean(self) -> bool:
        return not (
            self.off_lattice
            or self.non_dominant
            or self.collisions
            or self.roundtrip_failures
        )

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "radius": self.radius,
            "off_lattice": self.off_lattice,
            "non_dominant": self.non_dominant,
            "collisions": self.collisions,
            "roundtrip_failures": self.roundtrip_failures,
            "clean": self.is_clean(),
        }


def _labels_for_box(radius: int):
    """Labels whose backward outputs can land in |a|,|b|,|c| <= radius."""
    yield SimpleLabel(ORBIT_REGULAR)
    for a in range(-2 * radius - 2, 2 * radius + 3):
        yield SimpleLabel(ORBIT_MIDDLE, a)
    bound = radius + 2
    for a in range(0, bound + 1):
        for b in range(-bound, a + 1):
            c = -a - b
            if b >= c and abs(c) <= bound:
                yield SimpleLabel(ORBIT_ZERO, Weight(a, b, c))


def dominant_box(radius: int) -> list[Weight]:
    """All dominant lattice weights with |a|, |b|, |c| <= radius."""
    out = []
    for a in range(0, radius + 1):
        for b in range(-radius, a + 1):
            c = -a - b
            if b >= c and -radius <= c:
                out.append(Weight(a, b, c))
    return sorted(out, key=lambda w: w.coords)


def lv_audit(radius: int, mode: str = CORRECTED) -> AuditReport:
    """Audit every label whose output lands in the radius box.

    Flags off-lattice outputs (the verbatim negative rows), non-dominant
    outputs (small-gap images of the zero-orbit row), collisions between
    rows, and failures of the two round trips.
    """
    _check_mode(mode)
    if radius <= 0:
        raise ValueError("radius must be positive")
    report = AuditReport(mode=mode, radius=radius)
    by_output: dict[tuple[int, int, int], list[SimpleLabel]] = {}
    for label in _labels_for_box(radius):
        out = lv_backward(label, mode)
        if max(abs(v) for v in out) > radius:
            continue
        if sum(out) != 0:
            report.off_lattice.append(
                {
                    "label": label.to_json(),
                    "output": list(out),
                    "coordinate_sum": sum(out),
                }
            )
            continue
        w = Weight.of(out)
        if not w.is_dominant():
            report.non_dominant.append(
                {"label": label.to_json(), "output": list(out)}
            )
            continue
        by_output.setdefault(out, []).append(label)
        back = lv_forward(w)
        if back != label:
            report.roundtrip_failures.append(
                {
                    "direction": "backward-forward",
                    "label": label.to_json(),
                    "output": list(out),
                    "forward": back.to_json(),
                }
            )
    for out, labels in sorted(by_output.items()):
        if len(labels) > 1:
            report.collisions.append(
                {"weight": list(out), "labels": [l.to_json() for l in labels]}
            )
    for lam in dominant_box(radius):
        label = lv_forward(lam)
        back = lv_backward(label, mode)
        if back != lam.coords:
            report.roundtrip_failures.append(
                {
                    "direction": "forward-backward",
                    "weight": lam.to_json(),
                    "label": label.to_json(),
                    "backward": list(back),
                }
            )
    return report
