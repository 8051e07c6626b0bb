"""Command line interface: ``wonderaut [--format human|machine] COMMAND FILE ...``.

Exit codes: 0 success, 1 usage, 2 parse error, 3 invalid system,
4 failed precondition, 5 input outside the classification.
``validate`` also exits 3 when violations are found.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

from . import io, report
from .automorphism import aut_group
from .colors import compute_colors, resolve_label
from .errors import InvalidIndex, UnknownColor, WonderError
from .quotient import quotient_by
from .structure import decompose
from .system import SphericalSystem, localize


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path: str) -> SphericalSystem:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return io.parse_document(text)[0]


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InvalidIndex(f"expected comma-separated integers, got {text!r}") from None


def _color_list(colors, text: str) -> set[str]:
    """Split ``--colors``; B-labels contain commas, so the longest resolvable run wins."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    out, i = set(), 0
    while i < len(tokens):
        for j in range(len(tokens), i, -1):
            try:
                out.add(resolve_label(colors, ",".join(tokens[i:j])))
            except UnknownColor:
                if j == i + 1:
                    raise
                continue
            i = j
            break
    return out


def _gamma(data: dict) -> str:
    return " + ".join(r if c == "1" else f"{c}*{r}" for r, c in data.items())


def _system_lines(doc: dict, indent: str = "  ") -> list[str]:
    group = " x ".join(f"{c['kind']}{c['rank']}" for c in doc["group"])
    lines = [f"{indent}group: {group}",
             f"{indent}S^p: {{{', '.join(doc['sp'])}}}",
             f"{indent}Sigma:"]
    lines += [f"{indent}  gamma_{k} = {_gamma(g)}" for k, g in enumerate(doc["sigma"], 1)]
    if not doc["sigma"]:
        lines[-1] += " (empty, rank 0)"
    lines.append(f"{indent}A: " + ("(empty)" if not doc["A"] else ""))
    for c in doc["A"]:
        lines.append(f"{indent}  {c['label']}: moved by {{{', '.join(c['moved_by'])}}}, row {c['row']}")
    if not doc["adjoint_faithful"]:
        lines.append(f"{indent}(action not assumed faithful)")
    return lines


def _human(command: str, data: dict) -> str:
    out: list[str] = []
    if command == "validate":
        out.append("valid" if data["valid"] else f"{len(data['violations'])} violation(s)")
        out += [f"  {v['code']}: {v['message']}" for v in data["violations"]]
    elif command == "colors":
        rows = [(c["label"], c["kind"], "{" + ", ".join(c["moved_by"]) + "}",
                 "(" + ", ".join(c["row"]) + ")") for c in data["colors"]]
        header = ("label", "kind", "moved_by", "row")
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(4)]
        for r in [header] + rows:
            out.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    elif command == "fixed":
        for d in data["divisors"]:
            state = "fixed" if d["fixed"] else "not fixed"
            out.append(f"gamma_{d['index']} = {_gamma(d['gamma'])}: {state}")
        if not data["divisors"]:
            out.append("rank 0: no boundary divisors")
    elif command == "decompose":
        n = len(data["factors"])
        out.append("indecomposable" if data["trivial"] else f"product of {n} factors")
        for k, f in enumerate(data["factors"], 1):
            out.append(f"factor {k}: components {f['components']}, sigma {f['sigma_indices']}, "
                       f"rank {f['rank']}, {'cuspidal' if f['cuspidal'] else 'not cuspidal'}")
            out += _system_lines(f["system"], "    ")
            core = f["core"]
            if f["cuspidal"]:
                continue
            out.append(f"    stripped roots: {{{', '.join(core['stripped'])}}}")
            if core["system"] is None:
                out.append("    cuspidal core: empty (full flag variety)")
            else:
                out.append("    cuspidal core:")
                out += _system_lines(core["system"], "      ")
                emb = ", ".join(f"{k}->{v}" for k, v in core["embedding"].items())
                out.append(f"      embedding: {emb}")
    elif command in ("quotient", "localize"):
        if "report" in data:
            r = data["report"]
            out.append(f"removed colors: {', '.join(r['removed_colors']) or '(none)'}")
            out.append(f"removed spherical roots: {r['removed_sigma'] or '(none)'}")
            for old, new in r["relabel"].items():
                if old != new:
                    out.append(f"  {old} is now {new}")
        out.append("system:")
        out += _system_lines(data)
    elif command == "aut":
        if data["equals_g"]:
            out.append("Aut⁰(X) = G")
        else:
            out.append("Aut⁰(X) is larger than G: " + " x ".join(data["new_group"]))
        for k, v in enumerate(data["verdicts"], 1):
            extra = f" ({v['detail']})" if v["detail"] else ""
            rep = f", replaced components {v['replaced_components']}" if v["replaced_components"] else ""
            out.append(f"  factor {k} on components {v['components']}: {v['kind']}{extra}{rep}")
        b = data["boundary_under_aut"]
        out.append("boundary under Aut⁰(X): "
                   + ("{" + ", ".join(f"gamma_{i}" for i in b) + "} (fixed)" if b else "empty"))
        out.append("homogeneous under Aut⁰(X): " + ("yes" if data["homogeneous_under_aut"] else "no"))
        if data["new_system"] is not None:
            out.append("spherical system under Aut⁰(X):")
            out += _system_lines(data["new_system"])
        elif not data["equals_g"]:
            out.append("spherical system under Aut⁰(X): not determined")
    elif command == "check-main2":
        out.append(f"criterion holds: {'yes' if data['holds'] else 'no'}")
        if data["witness"]:
            out.append(f"witness color: {data['witness']}")
    elif command == "selftest":
        for f in data["failures"]:
            out.append(f"FAIL {f['fixture']}.{f['check']}: expected {json.dumps(f['expected'])}, "
                       f"got {json.dumps(f['got'])}")
        out.append(f"{data['fixtures']} fixtures, {data['checks']} checks, "
                   f"{len(data['failures'])} failure(s)")
    return "\n".join(out) + "\n"


def _selftest(directory: str | None) -> dict:
    if directory:
        fixtures = io.load_fixture_dir(directory)
    else:
        with resources.as_file(resources.files("wonderaut") / "data") as d:
            fixtures = io.load_fixture_dir(d)
    with ThreadPoolExecutor() as pool:
        results = [r for rs in pool.map(report.run_checks, fixtures) for r in rs]
    return {"fixtures": len(fixtures), "checks": len(results),
            "failures": [{k: r[k] for k in ("fixture", "check", "expected", "got")}
                         for r in results if not r["ok"]]}


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "machine"), default=argparse.SUPPRESS,
                     help="output format (default: human)")
    p = _Parser(prog="wonderaut", parents=[fmt],
                description="Luna spherical systems and automorphism groups of wonderful varieties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in (("validate", "list failed structural checks"),
                           ("colors", "reconstruct the full color set"),
                           ("fixed", "fixed / non-fixed boundary divisors"),
                           ("decompose", "product factors, cuspidality and cuspidal cores"),
                           ("aut", "connected automorphism group and its spherical system"),
                           ("check-main2", "positive-color criterion for Aut⁰(X) != G")):
        s = sub.add_parser(name, parents=[fmt], help=helptext)
        s.add_argument("file", help="system or fixture document ('-' for stdin)")
    q = sub.add_parser("quotient", parents=[fmt], help="quotient by positive colors")
    q.add_argument("file")
    q.add_argument("--colors", required=True, help="comma-separated color labels")
    loc = sub.add_parser("localize", parents=[fmt], help="subsystem on the given spherical roots")
    loc.add_argument("file")
    loc.add_argument("--keep", required=True, help="comma-separated 1-based sigma indices")
    st = sub.add_parser("selftest", parents=[fmt], help="run the expected checks of a fixture directory")
    st.add_argument("directory", nargs="?", help="defaults to the bundled fixtures")
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "human")
    cmd = args.command
    status = 0
    try:
        if cmd == "selftest":
            data = _selftest(args.directory)
            status = 0 if not data["failures"] else 3
        else:
            system = _read(args.file)
            if cmd == "validate":
                data = report.violations_data(system)
                status = 0 if data["valid"] else 3
            elif cmd == "colors":
                data = report.colors_data(compute_colors(system))
            elif cmd == "fixed":
                data = report.fixed_data(system)
            elif cmd == "decompose":
                data = report.decomposition_data(decompose(system))
            elif cmd == "quotient":
                colors = compute_colors(system)
                data = report.quotient_data(quotient_by(system, _color_list(colors, args.colors)))
            elif cmd == "localize":
                data = io.system_to_data(localize(system, _int_list(args.keep)))
            elif cmd == "aut":
                data = report.aut_data(aut_group(system))
            else:
                data = report.main2_data(system)
    except WonderError as e:
        print(f"wonderaut: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"wonderaut: {e}", file=sys.stderr)
        return 1
    sys.stdout.write(io.dumps(data) if fmt == "machine" else _human(cmd, data))
    return status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
