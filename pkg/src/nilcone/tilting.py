"""Quantum-group tilting cohomology through the graded tables.

For an antidominant weight the small-quantum-group cohomology of the
block's tilting module collapses the table of the attached simple object:
Ext^k collects the row-i entry at grading k-i.  Everything on the right
side is level-independent; the level enters only through the highest
weight labelling the tilting module.

The characteristic-p nonvanishing used by the positivity bookkeeping
(first cohomology at (-p, p, 0)) is an imported fact, recorded here as an
assumption rather than computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lv
from .cohomology import check_characteristic
from .ic_tables import (
    GradedTable,
    Symbol,
    entry_character,
    entry_dimension,
    ic_table,
)
from .weights import W0, Weight, act, check_level, tilting_highest_weight


def simple_pc_object(
    lam: Weight, char: int = 0, max_grading: int = 40
) -> tuple[lv.SimpleLabel, GradedTable]:
    """Label and normalized table of the simple object attached to a
    dominant weight."""
    if not lam.is_dominant():
        raise ValueError(f"expected a dominant weight, got {lam}")
    label = lv.lv_forward(lam)
    return label, ic_table(label, char=char, max_grading=max_grading)


@dataclass(frozen=True)
class ExtTable:
    lam: Weight
    level: int
    highest_weight: Weight | None
    label: lv.SimpleLabel
    char: int
    ext: dict[int, tuple[Symbol, ...]]

    def dims(self) -> dict[int, int]:
        if self.char != 0:
            raise ValueError("dimensions are resolved in characteristic zero only")
        return {k: entry_dimension(syms) for k, syms in self.ext.items()}

    def to_json(self) -> dict:
        ext = []
        for k in sorted(self.ext):
            syms = self.ext[k]
            row = {"k": k, "symbols": [s.to_json() for s in syms]}
            if self.char == 0:
                row["dim"] = entry_dimension(syms)
                ch = entry_character(syms)
                parts = sorted(ch.mult.items(), reverse=True)
                if parts and entry_dimension(syms) == ch.dim:
                    row["highest_weight"] = list(max(ch.mult))
            ext.append(row)
        out = {
            "lambda": self.lam.to_json(),
            "level": self.level,
            "highest_weight": (
                self.highest_weight.to_json() if self.highest_weight else None
            ),
            "label": self.label.to_json(),
            "char": self.char,
            "ext": ext,
        }
        if self.label.orbit != lv.ORBIT_ZERO:
            out["label_note"] = (
                "row-priority choice; the unrestricted zero-orbit row of the "
                "correspondence also matches this weight"
            )
        return out


def ext_table(
    lam: Weight, level: int = 5, kmax: int = 20, char: int = 0
) -> ExtTable:
    """Tilting-module cohomology attached to an antidominant weight.

    Ext^k is the direct sum over homological rows i of the table entry at
    grading k - i for the simple object of the dominant partner w0(lam).
    In prime mode the entries stay symbolic.
    """
    check_level(level)
    check_characteristic(char)
    if not lam.is_antidominant():
        raise ValueError(f"expected an antidominant weight, got {lam}")
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    dominant = act(W0, lam)
    label, table = simple_pc_object(dominant, char=char, max_grading=kmax + 3)
    entries = table.materialized()
    ext: dict[int, tuple[Symbol, ...]] = {}
    for (i, m), syms in entries.items():
        k = i + m
        if 0 <= k <= kmax:
            ext[k] = ext.get(k, ()) + syms
    if any(i + m < 0 for (i, m) in entries):
        raise AssertionError("negative Ext degree from a table entry")
    return ExtTable(
        lam=lam,
        level=level,
        highest_weight=tilting_highest_weight(lam, level),
        label=label,
        char=char,
        ext=dict(sorted(ext.items())),
    )


@dataclass
class IrreducibilityReport:
    checked: int = 0
    skipped_trivial: list[Weight] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "skipped_trivial": [w.to_json() for w in self.skipped_trivial],
            "failures": self.failures,
            "passed": self.passed(),
        }


def irreducibility_audit(lams, kmax: int = 60) -> IrreducibilityReport:
    """Check that each Ext degree of a nontrivial tilting module carries at
    most one table entry, and that the entry evaluates to a single
    irreducible.  The zero weight is skipped: its coordinate-ring graded
    pieces are genuinely reducible, which is why the nontriviality
    hypothesis is needed.
    """
    report = IrreducibilityReport()
    for lam in lams:
        if not lam.is_antidominant():
            raise ValueError(f"expected antidominant weights, got {lam}")
        if lam == Weight(0, 0, 0):
            report.skipped_trivial.append(lam)
            continue
        dominant = act(W0, lam)
        label, table = simple_pc_object(dominant, char=0, max_grading=kmax)
        seen: dict[int, int] = {}
        for (i, m), syms in table.materialized().items():
            k = i + m
            if k > kmax:
                continue
            seen[k] = seen.get(k, 0) + len(syms)
            if k < 0:
                report.failures.append(
                    {"lambda": lam.to_json(), "k": k, "why": "negative degree"}
                )
            for sym in syms:
                ch = entry_character((sym,))
                dim = entry_dimension((sym,))
                if dim == 0 or ch != entry_character((sym,)) or ch.dim != dim:
                    report.failures.append(
                        {"lambda": lam.to_json(), "k": k, "why": "vanishing entry"}
                    )
        for k, count in seen.items():
            if count > 1:
                report.failures.append(
                    {
                        "lambda": lam.to_json(),
                        "k": k,
                        "why": f"{count} entries contribute",
                    }
                )
        report.checked += 1
    return report


def positivity_counterexample_data(p: int) -> tuple[int, int, Weight, int, int]:
    """Arithmetic of the characteristic-p positivity failure.

    With twist a = p and symmetric degree n = p + 1 (which satisfies
    n < 3a/2 since p > 2), the table row-2 weight is (-p, p, 0); its
    nonvanishing first cohomology in characteristic p is an imported
    nonvanishing theorem, taken as an input assumption.  Returns
    (a, n, weight, grading degree, positive extension shift 3a - 2n).
    """
    if p in (0, 2, 3):
        raise ValueError("the counterexample needs a prime p > 3")
    check_characteristic(p)
    a, n = p, p + 1
    weight = Weight(n - 1 - 2 * a, a, -n + 1 + a)
    assert weight == Weight(-p, p, 0)
    assert 2 * n < 3 * a  # n < 3a/2
    shift = 3 * a - 2 * n
    assert shift > 0
    return (a, n, weight, -p, shift)
