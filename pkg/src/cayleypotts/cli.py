"""Command-line interface.

Exit codes: 0 = ran to completion (verdict content may still say "false" or
"mismatch"), 1 = usage or domain error, 2 = internal oracle inconsistency.
All outputs are deterministic functions of the arguments, including thread
count.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .energy import format_rational, parse_coupling
from .errors import CayleyPottsError, OracleMismatchError
from .families import (
    dump_config,
    load_config,
    parse_family,
    with_flips,
)
from .phases import (
    compute_fan,
    fan_to_jsonable,
    minimizing_classes,
    region_comparison_report,
)
from .svgfan import render_fan
from .verify import (
    census,
    check_periodic,
    check_weakly_periodic,
    is_ground_state,
    theorem1_report,
    theorem2_report,
)
from .words import format_word, parse_word
from .energy import relative_energy, relative_energy_by_balls, difference_set


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here reserves 2 for
    oracle inconsistency, so remap usage errors to 1."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept coupling values like "-5,1" after --j; stock argparse only
        # waves through bare negative numbers
        self._negative_number_matcher = re.compile(
            r"^-\d+(/\d+)?(,-?\d+(/\d+)?)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, args) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _add_output(p) -> None:
    p.add_argument("--output", metavar="PATH",
                   help="write to this file instead of stdout")


def _add_format(p, choices=("json", "text")) -> None:
    p.add_argument("--format", choices=choices, default=choices[0])


def _add_source(p) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", metavar="SPEC",
                     help="family spec, e.g. parity2:A=1|1,2")
    src.add_argument("--from-file", dest="from_file", metavar="PATH",
                     help="configuration dump to read")


def _load_source(args, default_radius: int = 6):
    if args.from_file:
        with open(args.from_file, "r", encoding="utf-8") as fh:
            config = load_config(fh)
        radius = args.radius if args.radius is not None else config.max_radius
    else:
        config = parse_family(args.family)
        radius = args.radius if args.radius is not None else default_radius
    return config, radius


def _parse_flips(pairs) -> dict:
    flips = {}
    for item in pairs or ():
        word_text, sep, value_text = item.partition("=")
        if not sep:
            raise CayleyPottsError(f"flip must look like WORD=VALUE: {item!r}")
        try:
            value = int(value_text)
        except ValueError:
            raise CayleyPottsError(f"flip value must be an integer: {item!r}")
        flips[parse_word(word_text)] = value
    return flips


# --- text renderers ----------------------------------------------------------

def _census_text(cens) -> str:
    lines = [
        f"family:  {cens.family}",
        f"radius:  {cens.radius}",
        f"centers: {sum(cens.counts.values())}",
        "class  count",
    ]
    for cls, n in sorted(cens.counts.items()):
        lines.append(f"{cls:>5}  {n:>5}")
    tag = "uniform" if cens.uniform else "mixed"
    lines.append(f"modal: {cens.modal_class} ({tag})")
    if cens.exceptions:
        shown = ", ".join(f"{format_word(w)}:{c}"
                          for w, c in cens.exceptions[:5])
        more = len(cens.exceptions) - min(5, len(cens.exceptions))
        suffix = f" (+{more} more)" if more else ""
        lines.append(f"off-modal: {shown}{suffix}")
    return "\n".join(lines) + "\n"


def _periodicity_text(rep) -> str:
    kind = "weakly periodic" if rep.weak else "periodic"
    lines = [
        f"family: {rep.family}",
        f"map:    {rep.coset_map}",
        f"radius: {rep.radius}",
        f"{kind}: {'yes' if rep.holds else 'no'}",
    ]
    for x, y, vx, vy in rep.witnesses:
        lines.append(f"  {format_word(x)}={vx} vs {format_word(y)}={vy}")
    return "\n".join(lines) + "\n"


def _verdict_text(verdict) -> str:
    lines = [
        f"family: {verdict.family}",
        f"j:      ({format_rational(verdict.j.j1)}, "
        f"{format_rational(verdict.j.j2)})",
        f"radius: {verdict.radius}",
        f"argmin: {' '.join(str(c) for c in verdict.argmin)}",
        f"ground state (necessary condition): "
        f"{'true' if verdict.holds else 'false'}",
    ]
    if not verdict.holds:
        lines.append(f"violations: {verdict.violation_count}, gaps "
                     f"{' '.join(format_rational(g) for g in verdict.gaps)}")
        for w, c, g in verdict.violations:
            lines.append(f"  {format_word(w)} class {c} gap "
                         f"{format_rational(g)}")
    return "\n".join(lines) + "\n"


def _fan_text(fan) -> str:
    lines = ["start      end        ray-min              interior-min",
             "origin: all 12 classes tie"]
    rows = []
    for s in fan.sectors:
        rows.append("{:<10} {:<10} {:<20} {}".format(
            f"({s.start[0]},{s.start[1]})",
            f"({s.end[0]},{s.end[1]})",
            ",".join(str(c) for c in sorted(s.start_ray_min)),
            ",".join(str(c) for c in sorted(s.interior_min))))
    return "\n".join([lines[0]] + rows + [lines[1]]) + "\n"


def _comparison_text(report) -> str:
    lines = [
        f"samples: {report['samples']}",
        f"agreeing classes:    "
        f"{' '.join(str(c) for c in report['agreeing_classes'])}",
        f"disagreeing classes: "
        f"{' '.join(str(c) for c in report['disagreeing_classes'])}",
    ]
    for cls in report["disagreeing_classes"]:
        entry = report["per_class"][str(cls)]
        lines.append(f"class {cls}: {entry['disagreements']} of "
                     f"{entry['checked']} samples disagree")
        for w in entry["witnesses"]:
            side = "printed region only" if w["claimed"] else "argmin only"
            lines.append(f"  j=({w['j'][0]},{w['j'][1]}): {side}")
    return "\n".join(lines) + "\n"


def _theorem1_text(report) -> str:
    header = "{:<8} {:<26} {:>7} {:>6} {:<8} {:<6}".format(
        "case", "family", "claimed", "modal", "uniform", "match")
    lines = [f"radius: {report['radius']}", header]
    for row in report["rows"]:
        lines.append("{:<8} {:<26} {:>7} {:>6} {:<8} {:<6}".format(
            row["case"], row["family"], row["claimed_class"],
            row["modal_class"], str(row["uniform"]).lower(),
            str(row["matches_claim"]).lower()))
        if not row["matches_claim"]:
            counts = " ".join(f"{c}:{n}" for c, n in row["counts"].items())
            lines.append(f"         counts {counts}")
            if row["witnesses"]:
                shown = ", ".join(f"{w['vertex']}:{w['class']}"
                                  for w in row["witnesses"])
                lines.append(f"         witnesses {shown}")
    lines.append(f"all match: {str(report['all_match']).lower()}")
    return "\n".join(lines) + "\n"


def _theorem2_text(report) -> str:
    lines = [f"radius: {report['radius']}  seed: {report['seed']}"]
    for case in report["cases"]:
        if case["case"] == "A":
            lines.append(f"A     j=(0,0) {case['random_configs']} random "
                         f"configs: "
                         f"{'all pass' if case['all_pass'] else 'FAILURES'}")
            continue
        lines.append(f"{case['case']:<5} {case['set']:<9} "
                     f"j=({case['j'][0]},{case['j'][1]}) "
                     f"in-set={str(case['in_set']).lower()} "
                     f"argmin={{{','.join(str(c) for c in case['argmin'])}}}")
        for chk in case["checks"]:
            mark = "ok " if chk["as_expected"] else "!! "
            lines.append(f"  {mark}{chk['role']:<9} {chk['family']:<26} "
                         f"pass={str(chk['pass']).lower()} "
                         f"expected={str(chk['expected_pass']).lower()}")
    lines.append(
        f"all as expected: {str(report['all_as_expected']).lower()}")
    return "\n".join(lines) + "\n"


# --- subcommand bodies ---------------------------------------------------------

def _cmd_generate(args) -> int:
    config = parse_family(args.family)
    if args.flip:
        config = with_flips(config, _parse_flips(args.flip))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            dump_config(config, args.radius, fh)
    else:
        dump_config(config, args.radius, sys.stdout)
    return 0


def _cmd_census(args) -> int:
    config, radius = _load_source(args)
    cens = census(config, radius, cross_check=args.cross_check,
                  threads=args.threads)
    if args.format == "json":
        _emit(_json(cens.to_jsonable()), args)
    else:
        _emit(_census_text(cens), args)
    return 0


def _cmd_periodic(args, weak: bool) -> int:
    config, radius = _load_source(args)
    checker = check_weakly_periodic if weak else check_periodic
    rep = checker(config, args.map, radius)
    if args.format == "json":
        _emit(_json(rep.to_jsonable()), args)
    else:
        _emit(_periodicity_text(rep), args)
    return 0


def _cmd_groundstate(args) -> int:
    config, radius = _load_source(args)
    verdict = is_ground_state(config, parse_coupling(args.j), radius,
                              cross_check=args.cross_check)
    if args.format == "json":
        _emit(_json(verdict.to_jsonable()), args)
    else:
        _emit(_verdict_text(verdict), args)
    return 0


def _cmd_phase_at(args) -> int:
    j = parse_coupling(args.j)
    payload = {
        "j": [str(j.j1), str(j.j2)],
        "argmin": sorted(minimizing_classes(j)),
    }
    if args.format == "json":
        _emit(_json(payload), args)
    else:
        _emit("argmin at ({},{}): {}\n".format(
            payload["j"][0], payload["j"][1],
            " ".join(str(c) for c in payload["argmin"])), args)
    return 0


def _cmd_phase_fan(args) -> int:
    fan = compute_fan()
    if args.format == "json":
        _emit(_json(fan_to_jsonable(fan)), args)
    elif args.format == "svg":
        _emit(render_fan(fan), args)
    else:
        _emit(_fan_text(fan), args)
    return 0


def _cmd_compare_regions(args) -> int:
    report = region_comparison_report()
    if args.format == "json":
        _emit(_json(report), args)
    else:
        _emit(_comparison_text(report), args)
    return 0


def _cmd_report_theorem1(args) -> int:
    report = theorem1_report(radius=args.radius, cross_check=args.cross_check,
                             threads=args.threads)
    if args.format == "json":
        _emit(_json(report), args)
    else:
        _emit(_theorem1_text(report), args)
    return 0


def _cmd_report_theorem2(args) -> int:
    report = theorem2_report(radius=args.radius, seed=args.seed,
                             random_samples=args.samples)
    if args.format == "json":
        _emit(_json(report), args)
    else:
        _emit(_theorem2_text(report), args)
    return 0


def _cmd_hamiltonian_rel(args) -> int:
    base = parse_family(args.family)
    flips = _parse_flips(args.flip)
    perturbed = with_flips(base, flips)
    j = parse_coupling(args.j)
    diff = difference_set(perturbed.value, base.value, args.radius)
    by_pairs = relative_energy(perturbed.value, base.value, j, args.radius)
    by_balls = relative_energy_by_balls(perturbed.value, base.value, j,
                                        args.radius)
    if by_pairs != by_balls:
        raise OracleMismatchError(
            f"pair route {by_pairs} != ball route {by_balls}")
    payload = {
        "family": base.spec,
        "flips": [{"vertex": format_word(w), "value": v}
                  for w, v in sorted(flips.items())],
        "j": [str(j.j1), str(j.j2)],
        "radius": args.radius,
        "difference": [format_word(w) for w in diff],
        "relative_energy": format_rational(by_pairs),
        "routes_agree": True,
    }
    if args.format == "json":
        _emit(_json(payload), args)
    else:
        _emit(f"relative energy: {payload['relative_energy']} "
              f"(difference set {len(diff)} vertices, both routes agree)\n",
              args)
    return 0


# --- parser ------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="cayleypotts",
                     description="ground states of the competing-interaction "
                                 "Potts model on the order-3 Cayley tree")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="COMMAND")

    p = sub.add_parser("generate", help="dump a configuration over a ball")
    p.add_argument("--family", metavar="SPEC", required=True)
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("--flip", action="append", metavar="WORD=VALUE")
    _add_output(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("census", help="classify every complete ball")
    _add_source(p)
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--cross-check", action="store_true", dest="cross_check")
    p.add_argument("--threads", type=int, default=1)
    _add_format(p)
    _add_output(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify-periodic",
                       help="constant on the cosets of a named map?")
    _add_source(p)
    p.add_argument("--map", required=True, metavar="NAME")
    p.add_argument("--radius", type=int, default=None)
    _add_format(p)
    _add_output(p)
    p.set_defaults(func=lambda a: _cmd_periodic(a, weak=False))

    p = sub.add_parser("verify-weak",
                       help="determined by (parent coset, own coset)?")
    _add_source(p)
    p.add_argument("--map", required=True, metavar="NAME")
    p.add_argument("--radius", type=int, default=None)
    _add_format(p)
    _add_output(p)
    p.set_defaults(func=lambda a: _cmd_periodic(a, weak=True))

    p = sub.add_parser("groundstate",
                       help="radius-limited ground-state verdict")
    _add_source(p)
    p.add_argument("--j", required=True, metavar="J1,J2")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--cross-check", action="store_true", dest="cross_check")
    _add_format(p)
    _add_output(p)
    p.set_defaults(func=_cmd_groundstate)

    p = sub.add_parser("phase", help="coupling-plane queries")
    psub = p.add_subparsers(dest="subcommand", required=True,
                            metavar="SUBCOMMAND")
    pa = psub.add_parser("at", help="minimizing classes at one coupling")
    pa.add_argument("--j", required=True, metavar="J1,J2")
    _add_format(pa)
    _add_output(pa)
    pa.set_defaults(func=_cmd_phase_at)
    pf = psub.add_parser("fan", help="the full fan of minimizing sectors")
    _add_format(pf, choices=("json", "text", "svg"))
    _add_output(pf)
    pf.set_defaults(func=_cmd_phase_fan)

    p = sub.add_parser("compare", help="claims vs measurements")
    csub = p.add_subparsers(dest="subcommand", required=True,
                            metavar="SUBCOMMAND")
    cr = csub.add_parser("regions",
                         help="printed closed-form regions vs exact argmin")
    _add_format(cr)
    _add_output(cr)
    cr.set_defaults(func=_cmd_compare_regions)

    p = sub.add_parser("report", help="theorem-by-theorem verification")
    rsub = p.add_subparsers(dest="subcommand", required=True,
                            metavar="SUBCOMMAND")
    r1 = rsub.add_parser("theorem1", help="census of every constructed family")
    r1.add_argument("--radius", type=int, default=6)
    r1.add_argument("--threads", type=int, default=1)
    r1.add_argument("--cross-check", action=argparse.BooleanOptionalAction,
                    dest="cross_check", default=True)
    _add_format(r1)
    _add_output(r1)
    r1.set_defaults(func=_cmd_report_theorem1)
    r2 = rsub.add_parser("theorem2",
                         help="ground-state verdicts at committed couplings")
    r2.add_argument("--radius", type=int, default=6)
    r2.add_argument("--seed", type=int, default=7)
    r2.add_argument("--samples", type=int, default=20)
    _add_format(r2)
    _add_output(r2)
    r2.set_defaults(func=_cmd_report_theorem2)

    p = sub.add_parser("hamiltonian", help="energy accounting")
    hsub = p.add_subparsers(dest="subcommand", required=True,
                            metavar="SUBCOMMAND")
    hr = hsub.add_parser("rel",
                         help="relative energy of a local perturbation, "
                              "computed by two routes")
    hr.add_argument("--family", metavar="SPEC", required=True)
    hr.add_argument("--flip", action="append", metavar="WORD=VALUE")
    hr.add_argument("--j", required=True, metavar="J1,J2")
    hr.add_argument("--radius", type=int, default=6)
    _add_format(hr)
    _add_output(hr)
    hr.set_defaults(func=_cmd_hamiltonian_rel)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 2
    except CayleyPottsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
