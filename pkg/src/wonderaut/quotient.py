"""Positive colors and quotients by them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .colors import TYPE_A, ColorSet, compute_colors
from .errors import InconsistentQuotient, NotPositive
from .system import AColor, SphericalSystem, validate


@dataclass(frozen=True)
class QuotientResult:
    system: SphericalSystem
    removed_sigma: frozenset[int]
    removed_colors: frozenset[str]
    # surviving color label in the input -> its label in the quotient
    relabel: dict[str, str] = field(default_factory=dict, compare=False)


def positive_colors(sys: SphericalSystem) -> frozenset[str]:
    return frozenset(c.label for c in compute_colors(sys) if c.is_positive())


def quotient_by(sys: SphericalSystem, labels: Iterable[str]) -> QuotientResult:
    """Quotient by a set of positive colors.

    Spherical roots on which a chosen color is strictly positive go away,
    the chosen colors go away, and ``S^p`` and ``A`` follow from what is
    left.  The result is re-checked against a fresh color reconstruction.
    """
    colors = compute_colors(sys)
    chosen = [colors.get(label) for label in sorted(set(labels))]
    bad = [c.label for c in chosen if not c.is_positive()]
    if bad:
        raise NotPositive(f"colors are negative on some spherical root: {', '.join(bad)}")
    chosen_labels = {c.label for c in chosen}
    removed = frozenset(i for c in chosen for i, v in enumerate(c.row, 1) if v > 0)
    kept = [i for i in range(1, sys.rank + 1) if i not in removed]
    kept_simple = {a for a, k in sys.simple_spherical_roots().items() if k not in removed}

    survivors = [c for c in colors if c.label not in chosen_labels]
    acolors = []
    for c in survivors:
        if c.kind == TYPE_A and c.moved_by & kept_simple:
            acolors.append(AColor(c.label[2:], c.moved_by & kept_simple,
                                  tuple(c.row[i - 1] for i in kept)))
    moved = set().union(*(c.moved_by for c in survivors)) if survivors else set()
    sp = frozenset(r for r in sys.rs.roots() if r not in moved)
    result = SphericalSystem(sys.rs, sp, tuple(sys.sigma[i - 1] for i in kept), tuple(acolors),
                             sys.adjoint_faithful)

    violations = validate(result)
    if violations:
        raise InconsistentQuotient("quotient fails validation: "
                                   + "; ".join(str(v) for v in violations))
    relabel = _match(survivors, compute_colors(result), kept)
    return QuotientResult(result, removed, frozenset(chosen_labels), relabel)


def _match(survivors, new: ColorSet, kept: list[int]) -> dict[str, str]:
    if len(survivors) != len(new):
        raise InconsistentQuotient(
            f"{len(survivors)} colors survive but the quotient has {len(new)}")
    relabel = {}
    for c in survivors:
        row = tuple(c.row[i - 1] for i in kept)
        if c.label in new.labels:
            target = new.get(c.label)
        else:
            matches = [d for d in new if d.moved_by == c.moved_by and d.kind != TYPE_A]
            if len(matches) != 1:
                raise InconsistentQuotient(f"surviving color {c.label} has no counterpart")
            target = matches[0]
        if target.row != row:
            raise InconsistentQuotient(
                f"surviving color {c.label} restricts to {row} but is recomputed as {target.row}")
        relabel[c.label] = target.label
    if len(set(relabel.values())) != len(relabel):
        raise InconsistentQuotient("two surviving colors map to the same quotient color")
    return relabel
