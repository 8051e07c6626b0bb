"""JSON-ready views of every pipeline stage, shared by the CLI and ``selftest``."""

from __future__ import annotations

from typing import Any, Callable

from . import io
from .automorphism import AutReport, aut_group, main2_criterion, psp_criterion
from .colors import ColorSet, compute_colors, fixed_divisors, resolve_label
from .quotient import QuotientResult, positive_colors, quotient_by
from .structure import Decomposition, cuspidal_core, decompose, is_cuspidal
from .system import SphericalSystem, validate


def _ids(roots) -> list[str]:
    return [str(r) for r in sorted(roots)]


def violations_data(sys: SphericalSystem) -> dict[str, Any]:
    vs = validate(sys)
    return {"valid": not vs, "violations": [{"code": v.code, "message": v.message} for v in vs]}


def colors_data(colors: ColorSet) -> dict[str, Any]:
    return {"colors": [{"label": c.label, "kind": c.kind, "moved_by": _ids(c.moved_by),
                        "row": [str(v) for v in c.row]} for c in colors]}


def fixed_data(sys: SphericalSystem) -> dict[str, Any]:
    fixed = fixed_divisors(sys)
    return {"fixed": sorted(fixed),
            "divisors": [{"index": i, "gamma": {str(r): str(c) for r, c in g.items()},
                          "fixed": i in fixed} for i, g in enumerate(sys.sigma, 1)]}


def decomposition_data(d: Decomposition) -> dict[str, Any]:
    factors = []
    for f in d.factors:
        core = cuspidal_core(f.system)
        factors.append({
            "components": sorted(f.components),
            "sigma_indices": sorted(f.sigma_indices),
            "rank": f.system.rank,
            "cuspidal": is_cuspidal(f.system),
            "system": io.system_to_data(f.system),
            "core": {
                "system": io.system_to_data(core.core) if core.core else None,
                "stripped": _ids(core.stripped),
                "embedding": {str(k): str(v) for k, v in sorted(core.embedding.items())},
            },
        })
    return {"trivial": d.trivial, "factors": factors}


def quotient_data(q: QuotientResult) -> dict[str, Any]:
    data = io.system_to_data(q.system)
    data["report"] = {"removed_sigma": sorted(q.removed_sigma),
                      "removed_colors": sorted(q.removed_colors),
                      "relabel": dict(sorted(q.relabel.items()))}
    return data


def aut_data(r: AutReport) -> dict[str, Any]:
    return {
        "equals_g": r.equals_g,
        "verdicts": [{"kind": v.kind, "detail": v.detail, "components": sorted(v.components),
                      "sigma_indices": sorted(v.sigma_indices),
                      "replaced_components": sorted(v.replaced_components)} for v in r.verdicts],
        "new_group": list(r.new_group_description),
        "new_system": io.system_to_data(r.new_system) if r.new_system is not None else None,
        "boundary_under_aut": sorted(r.boundary_under_aut),
        "homogeneous_under_aut": r.homogeneous_under_aut,
    }


def main2_data(sys: SphericalSystem) -> dict[str, Any]:
    holds, witness = main2_criterion(sys)
    return {"holds": holds, "witness": witness}


def _quotient_check(sys, wanted):
    colors = compute_colors(sys)
    labels = {resolve_label(colors, name) for name in wanted["by"]}
    return {"by": wanted["by"], "system": io.system_to_data(quotient_by(sys, labels).system)}


def _aut_error(sys, _wanted):
    try:
        aut_group(sys)
    except Exception as e:  # the check records which error fired
        return type(e).__name__
    return None


# name -> function(system, expected value) -> computed value in the same shape
CHECKS: dict[str, Callable[[SphericalSystem, Any], Any]] = {
    "valid": lambda s, _: not validate(s),
    "violations": lambda s, _: [v.code for v in validate(s)],
    "rank": lambda s, _: s.rank,
    "fixed": lambda s, _: sorted(fixed_divisors(s)),
    "cuspidal": lambda s, _: is_cuspidal(s),
    "factors": lambda s, _: len(decompose(s).factors),
    "positive_colors": lambda s, _: sorted(positive_colors(s)),
    "color_rows": lambda s, _: {c.label: [str(v) for v in c.row] for c in compute_colors(s)},
    "psp": lambda s, _: sorted(psp_criterion(s)),
    "equals_g": lambda s, _: aut_group(s).equals_g,
    "verdicts": lambda s, _: [v.kind for v in aut_group(s).verdicts],
    "details": lambda s, _: [v.detail for v in aut_group(s).verdicts],
    "new_group": lambda s, _: list(aut_group(s).new_group_description),
    "new_system": lambda s, _: aut_data(aut_group(s))["new_system"],
    "boundary_under_aut": lambda s, _: sorted(aut_group(s).boundary_under_aut),
    "main2": lambda s, _: list(main2_criterion(s)),
    "quotient": _quotient_check,
    "aut_error": _aut_error,
}


def run_checks(fx: io.Fixture) -> list[dict[str, Any]]:
    """Evaluate every expected check of a fixture; one result dict per check."""
    results = []
    for name, expected in fx.expected.items():
        if name not in CHECKS:
            results.append({"fixture": fx.name, "check": name, "ok": False,
                            "expected": expected, "got": "unknown check"})
            continue
        try:
            got = CHECKS[name](fx.system, expected)
        except Exception as e:  # a crashing check is a failed check
            got = f"error: {type(e).__name__}: {e}"
        if name == "new_system" and isinstance(expected, dict):
            expected = io.system_to_data(io.system_from_data(expected))
        if name == "quotient":
            expected = {"by": expected["by"],
                        "system": io.system_to_data(io.system_from_data(expected["system"]))}
        results.append({"fixture": fx.name, "check": name, "ok": got == expected,
                        "expected": expected, "got": got})
    return results
