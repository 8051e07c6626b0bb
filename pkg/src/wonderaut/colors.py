"""Reconstruction of the full color set and the fixed boundary divisors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import UnknownColor
from .roots import SimpleRootId
from .system import SphericalSystem, require_valid, tilde_classes

TYPE_A = "TypeA"
TYPE_HALF = "TypeHalf"
TYPE_B = "TypeB"


@dataclass(frozen=True)
class Color:
    kind: str
    label: str
    moved_by: frozenset[SimpleRootId]
    row: tuple[Fraction, ...]

    def is_positive(self) -> bool:
        return all(v >= 0 for v in self.row)


@dataclass(frozen=True)
class ColorSet:
    colors: tuple[Color, ...]

    def __iter__(self):
        return iter(self.colors)

    def __len__(self):
        return len(self.colors)

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.colors]

    def get(self, label: str) -> Color:
        for c in self.colors:
            if c.label == label:
                return c
        raise UnknownColor(f"no color labelled {label!r}; known: {', '.join(self.labels)}")

    def moving(self, alpha: SimpleRootId) -> list[Color]:
        return [c for c in self.colors if alpha in c.moved_by]


def b_label(cls: Iterable[SimpleRootId]) -> str:
    return "b:" + ",".join(str(r) for r in sorted(cls))


def compute_colors(sys: SphericalSystem) -> ColorSet:
    """All colors: the A-colors, one per ``alpha`` with ``2 alpha`` in Sigma, one per b-class."""
    require_valid(sys)
    colors = [Color(TYPE_A, "a:" + c.label, c.moved_by, tuple(Fraction(v) for v in c.row))
              for c in sys.acolors]
    for alpha in sorted(sys.half_spherical_roots()):
        row = tuple(v / 2 for v in sys.coroot_row(alpha))
        colors.append(Color(TYPE_HALF, f"a1:{alpha}", frozenset([alpha]), row))
    for cls in tilde_classes(sys):
        colors.append(Color(TYPE_B, b_label(cls), cls, sys.coroot_row(min(cls))))
    return ColorSet(tuple(colors))


def fixed_divisors(sys: SphericalSystem) -> frozenset[int]:
    """1-based indices ``i`` such that some color is negative on ``gamma_i``."""
    out = set()
    for c in compute_colors(sys):
        out.update(i for i, v in enumerate(c.row, 1) if v < 0)
    return frozenset(out)


def boundary_under_aut(sys: SphericalSystem) -> frozenset[int]:
    """Boundary divisors that stay boundary divisors under the full connected
    automorphism group; these are exactly the fixed ones."""
    return fixed_divisors(sys)


_SHORT_ROOT = re.compile(r"\ba(\d+)('*)")


def resolve_label(colors: ColorSet, name: str) -> str:
    """Accept a full label, a bare A-color label, or short root names.

    ``a2`` stands for root ``1.2``, ``a2'`` for ``2.2`` and so on, so
    ``b:a2`` resolves to ``b:1.2``.
    """
    known = set(colors.labels)
    if name in known:
        return name
    if "a:" + name in known:
        return "a:" + name
    if ":" in name:
        prefix, _, body = name.partition(":")
        body = _SHORT_ROOT.sub(lambda m: f"{len(m.group(2)) + 1}.{m.group(1)}", body)
        try:
            ids = sorted(SimpleRootId.parse(t) for t in body.split(",") if t.strip())
        except ValueError:
            ids = []
        candidate = prefix + ":" + ",".join(str(r) for r in ids)
        if ids and candidate in known:
            return candidate
    raise UnknownColor(f"no color matches {name!r}; known: {', '.join(colors.labels)}")
