"""The JSON document format for spherical systems and fixtures.

A system document has exactly these top-level fields::

    {
      "group": [{"kind": "C", "rank": 3}],
      "sp": ["1.3"],
      "sigma": [{"1.1": "1", "1.2": "2", "1.3": "1"}],
      "A": [{"label": "D+", "moved_by": ["1.1"], "row": [1, 0]}],
      "adjoint_faithful": true
    }

Root ids are ``"component.bourbaki"``; coefficients are strings ``"p"`` or
``"p/2"``.  Fixture files add ``name`` and ``expected``; machine output of
the CLI may add ``report``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import InvalidWeight, ParseError
from .roots import RootSystem, SimpleComponent, SimpleRootId, Weight
from .system import AColor, SphericalSystem

SYSTEM_FIELDS = ("group", "sp", "sigma", "A", "adjoint_faithful")
ENVELOPE_FIELDS = ("name", "expected", "report")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


@dataclass
class Fixture:
    name: str
    system: SphericalSystem
    expected: dict[str, Any] = field(default_factory=dict)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value.strip()):
        return Fraction(value.strip())
    raise ParseError(f"{where}: expected a rational string like '2' or '1/2', got {value!r}")


def _root_id(value: Any, where: str) -> SimpleRootId:
    if not isinstance(value, str):
        raise ParseError(f"{where}: root ids are strings 'c.i', got {value!r}")
    try:
        return SimpleRootId.parse(value)
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from None


def _expect(value, kind, where):
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ParseError(f"{where}: expected {kind.__name__}, got {value!r}")
    return value


def system_from_data(data: Any) -> SphericalSystem:
    """Build a system from decoded JSON, rejecting unknown fields."""
    _expect(data, dict, "document")
    unknown = sorted(set(data) - set(SYSTEM_FIELDS))
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(unknown)}")
    for key in ("group", "sigma"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")

    comps = []
    for k, item in enumerate(_expect(data["group"], list, "group"), 1):
        _expect(item, dict, f"group[{k}]")
        if set(item) != {"kind", "rank"}:
            raise ParseError(f"group[{k}]: needs exactly 'kind' and 'rank'")
        comps.append(SimpleComponent(_expect(item["kind"], str, f"group[{k}].kind"),
                                     _expect(item["rank"], int, f"group[{k}].rank")))
    rs = RootSystem(tuple(comps))

    sp = [_root_id(r, "sp") for r in _expect(data.get("sp", []), list, "sp")]

    sigma = []
    for k, item in enumerate(_expect(data["sigma"], list, "sigma"), 1):
        _expect(item, dict, f"sigma[{k}]")
        coeffs = {_root_id(r, f"sigma[{k}]"): _rational(c, f"sigma[{k}][{r}]") for r, c in item.items()}
        try:
            sigma.append(Weight(coeffs))
        except InvalidWeight as e:
            raise InvalidWeight(f"sigma[{k}]: {e}") from None

    acolors = []
    for k, item in enumerate(_expect(data.get("A", []), list, "A"), 1):
        _expect(item, dict, f"A[{k}]")
        if set(item) != {"label", "moved_by", "row"}:
            raise ParseError(f"A[{k}]: needs exactly 'label', 'moved_by' and 'row'")
        label = _expect(item["label"], str, f"A[{k}].label")
        moved = [_root_id(r, f"A[{k}].moved_by") for r in _expect(item["moved_by"], list, f"A[{k}].moved_by")]
        row = [_expect(v, int, f"A[{k}].row") for v in _expect(item["row"], list, f"A[{k}].row")]
        acolors.append(AColor(label, frozenset(moved), tuple(row)))

    adjoint = _expect(data.get("adjoint_faithful", True), bool, "adjoint_faithful")
    return SphericalSystem(rs, frozenset(sp), tuple(sigma), tuple(acolors), adjoint)


def parse_system(text: str) -> SphericalSystem:
    return system_from_data(_load_json(text))


def system_to_data(sys: SphericalSystem) -> dict[str, Any]:
    return {
        "group": [{"kind": c.kind, "rank": c.rank} for c in sys.rs.components],
        "sp": [str(r) for r in sorted(sys.sp)],
        "sigma": [{str(r): str(c) for r, c in g.items()} for g in sys.sigma],
        "A": [{"label": c.label, "moved_by": [str(r) for r in sorted(c.moved_by)], "row": list(c.row)}
              for c in sys.acolors],
        "adjoint_faithful": sys.adjoint_faithful,
    }


def dumps(data: dict[str, Any]) -> str:
    """One top-level field per line, each value compact."""
    lines = [f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in data.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def serialize_system(sys: SphericalSystem) -> str:
    return dumps(system_to_data(sys))


def parse_document(text: str) -> tuple[SphericalSystem, dict[str, Any]]:
    """A system document possibly wrapped with ``name``/``expected``/``report``."""
    data = _expect(_load_json(text), dict, "document")
    extras = {k: data[k] for k in ENVELOPE_FIELDS if k in data}
    core = {k: v for k, v in data.items() if k not in ENVELOPE_FIELDS}
    return system_from_data(core), extras


def parse_fixture(text: str, default_name: str = "") -> Fixture:
    sys, extras = parse_document(text)
    expected = extras.get("expected", {})
    _expect(expected, dict, "expected")
    return Fixture(extras.get("name", default_name), sys, expected)


def serialize_fixture(fx: Fixture) -> str:
    data: dict[str, Any] = {"name": fx.name}
    data.update(system_to_data(fx.system))
    if fx.expected:
        data["expected"] = fx.expected
    return dumps(data)


def load_fixture(path: str | Path) -> Fixture:
    path = Path(path)
    return parse_fixture(path.read_text(encoding="utf-8"), path.stem)


def load_fixture_dir(path: str | Path) -> list[Fixture]:
    fixtures = [load_fixture(p) for p in sorted(Path(path).glob("*.wv"))]
    names = [f.name for f in fixtures]
    dup = sorted({n for n in names if names.count(n) > 1})
    if dup:
        raise ParseError(f"duplicate fixture names: {', '.join(dup)}")
    return fixtures
