"""Census, periodicity and ground-state verdicts, and the two theorem reports.

Verdicts separate what a construction claims from what the census measures:
a claim mismatch is reported with witness vertices, never silently repaired.
Census classification runs through the selected kernel backend and can be
cross-checked against an independent route that inverts ball energies at
three fixed generic couplings (OracleMismatchError on disagreement).
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .energy import (
    Coupling,
    ball_at,
    ball_energy,
    class_energy,
    coupling,
)
from .errors import InvalidParamsError, OracleMismatchError
from .families import Config, parse_family, random_config
from .cosets import named_coset_map
from .phases import SET_SAMPLES, minimizing_classes, theorem2_sets
from .words import ball_size, ball_vertices, format_word

#: Fixed generic couplings for the cross-check; chosen so every pair of class
#: forms differs at one of them (asserted by the test suite).
CROSS_CHECK_COUPLINGS = (
    Coupling(Fraction(97, 89), Fraction(-83, 79)),
    Coupling(Fraction(-61, 67), Fraction(71, 73)),
    Coupling(Fraction(101, 103), Fraction(107, 109)),
)


@dataclass(frozen=True)
class BallCensus:
    family: str
    radius: int
    counts: dict  # class -> number of centers
    modal_class: int
    uniform: bool
    exceptions: tuple  # (word, class) outside the modal class, canonical order

    def to_jsonable(self) -> dict:
        return {
            "family": self.family,
            "radius": self.radius,
            "counts": {str(c): n for c, n in sorted(self.counts.items())},
            "modal_class": self.modal_class,
            "uniform": self.uniform,
            "exceptions": [{"vertex": format_word(w), "class": c}
                           for w, c in self.exceptions],
        }


def census(config: Config, radius: int, cross_check: bool = False,
           threads: int = 1) -> BallCensus:
    """Classify the unit ball of every center in the next-smaller ball."""
    if radius < 2:
        raise InvalidParamsError(f"census needs radius >= 2, got {radius}")
    if threads < 1:
        raise InvalidParamsError(f"threads must be >= 1, got {threads}")
    values = config.values(radius)
    n_centers = ball_size(radius - 1)
    if threads == 1:
        classes = kernels.census_classes(values, n_centers)
    else:
        chunk = max(1, -(-n_centers // threads))
        ranges = [(lo, min(lo + chunk, n_centers))
                  for lo in range(0, n_centers, chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda r: kernels.census_classes(values, n_centers, r[0], r[1]),
                ranges))
        classes = [c for part in parts for c in part]
    if cross_check:
        _cross_check(config, radius, classes)
    counts = Counter(classes)
    modal = max(counts, key=lambda c: (counts[c], -c))
    centers = ball_vertices(radius - 1)
    exceptions = tuple((w, c) for w, c in zip(centers, classes) if c != modal)
    return BallCensus(
        family=config.spec,
        radius=radius,
        counts=dict(counts),
        modal_class=modal,
        uniform=len(counts) == 1,
        exceptions=exceptions,
    )


def _cross_check(config: Config, radius: int, classes) -> None:
    """Independent classification: walk the tree by words (not index
    arithmetic), compute each ball's energy at the three fixed couplings by
    direct counting, and find which class form matches all three."""
    tables = []
    for j in CROSS_CHECK_COUPLINGS:
        tables.append({cls: class_energy(cls, j) for cls in range(1, 13)})
    for i, c in enumerate(ball_vertices(radius - 1)):
        ball = ball_at(config.value, c)
        matching = set(range(1, 13))
        for j, table in zip(CROSS_CHECK_COUPLINGS, tables):
            e = ball_energy(ball, j)
            matching = {cls for cls in matching if table[cls] == e}
        if len(matching) != 1 or next(iter(matching)) != classes[i]:
            raise OracleMismatchError(
                f"census route says class {classes[i]} at {format_word(c)}, "
                f"energy inversion says {sorted(matching)}")


# --- periodicity ---------------------------------------------------------------

@dataclass(frozen=True)
class PeriodicityReport:
    family: str
    coset_map: str
    radius: int
    weak: bool
    holds: bool
    witnesses: tuple  # (x, y, value at x, value at y) with equal keys

    def to_jsonable(self) -> dict:
        return {
            "family": self.family,
            "coset_map": self.coset_map,
            "radius": self.radius,
            "weak": self.weak,
            "holds": self.holds,
            "witnesses": [
                {"x": format_word(x), "y": format_word(y),
                 "value_x": vx, "value_y": vy}
                for x, y, vx, vy in self.witnesses
            ],
        }


def check_periodic(config: Config, map_name: str, radius: int) -> PeriodicityReport:
    """Is the configuration constant on each coset within the radius ball?"""
    cmap = named_coset_map(map_name)
    first: dict = {}
    witnesses = []
    for x in ball_vertices(radius):
        key = cmap(x)
        v = config.value(x)
        if key not in first:
            first[key] = (x, v)
        elif first[key][1] != v and len(witnesses) < 5:
            witnesses.append((first[key][0], x, first[key][1], v))
    return PeriodicityReport(config.spec, map_name, radius, False,
                             not witnesses, tuple(witnesses))


def check_weakly_periodic(config: Config, map_name: str,
                          radius: int) -> PeriodicityReport:
    """Does the value depend only on (parent's coset, own coset)?  Needs an
    index-2 parity map; the root is skipped (no parent)."""
    cmap = named_coset_map(map_name)
    if cmap.index != 2:
        raise InvalidParamsError(
            f"weak periodicity is checked against index-2 parity maps, "
            f"{map_name!r} has index {cmap.index}")
    first: dict = {}
    witnesses = []
    for x in ball_vertices(radius):
        if not x:
            continue
        key = (cmap(x[:-1]), cmap(x))
        v = config.value(x)
        if key not in first:
            first[key] = (x, v)
        elif first[key][1] != v and len(witnesses) < 5:
            witnesses.append((first[key][0], x, first[key][1], v))
    return PeriodicityReport(config.spec, map_name, radius, True,
                             not witnesses, tuple(witnesses))


# --- ground-state verdicts -------------------------------------------------------

@dataclass(frozen=True)
class GroundVerdict:
    family: str
    j: Coupling
    radius: int
    holds: bool
    argmin: tuple  # sorted minimizing classes
    violation_count: int
    gaps: tuple  # distinct positive energy gaps among violations, sorted
    violations: tuple  # first few (word, class, gap)

    def to_jsonable(self) -> dict:
        return {
            "family": self.family,
            "j": [str(self.j.j1), str(self.j.j2)],
            "radius": self.radius,
            "holds": self.holds,
            "argmin": list(self.argmin),
            "violation_count": self.violation_count,
            "gaps": [str(g) for g in self.gaps],
            "violations": [
                {"vertex": format_word(w), "class": c, "gap": str(g)}
                for w, c, g in self.violations
            ],
        }


def is_ground_state(config: Config, j: Coupling, radius: int,
                    cross_check: bool = False) -> GroundVerdict:
    """Necessary condition at finite radius: every classified ball must sit in
    a minimizing class.  A False verdict is final; True only says no violation
    is visible within this radius."""
    cens = census(config, radius, cross_check=cross_check)
    am = minimizing_classes(j)
    lowest = class_energy(next(iter(am)), j)
    bad_classes = {c for c in cens.counts if c not in am}
    violations = []
    count = 0
    gaps = set()
    if bad_classes:
        centers = ball_vertices(radius - 1)
        classes = _classes_from_census(cens, centers)
        for w, c in zip(centers, classes):
            if c in bad_classes:
                count += 1
                gap = class_energy(c, j) - lowest
                gaps.add(gap)
                if len(violations) < 10:
                    violations.append((w, c, gap))
    return GroundVerdict(
        family=config.spec,
        j=j,
        radius=radius,
        holds=count == 0,
        argmin=tuple(sorted(am)),
        violation_count=count,
        gaps=tuple(sorted(gaps)),
        violations=tuple(violations),
    )


def _classes_from_census(cens: BallCensus, centers) -> list:
    exc = dict()
    for w, c in cens.exceptions:
        exc[w] = c
    return [exc.get(w, cens.modal_class) for w in centers]


# --- theorem reports --------------------------------------------------------------

#: family spec strings used by the reports; parameters are the smallest
#: admissible values (the graded family needs its second value off the
#: doubled-first-value collision, hence 1,3).
REPORT_FAMILIES = {
    "C1": ("ti:1", 1),
    "C2": ("parity2:A=1|1,2", 2),
    "C3": ("parity2:A=1,2|1,2", 3),
    "C4": ("parity2:A=1,2,3|1,2", 4),
    "C5": ("parity2:A=1,2,3,4|1,2", 5),
    "C6": ("phi6:1,2,3|1,2,3,4", 6),
    "C7-phi": ("phi7:A=1,2,3|1,2,3", 7),
    "C7-psi": ("psi7:A=1,2,3|1,2,3", 7),
    "C7-xi": ("xi7:1,2,3", 7),
    "C8": ("phi8:1,2;3;4|1,2,3,4", 8),
    "C9": ("phi9:1,3", 9),
    "C10": ("phi10:1,2,3", 10),
    "C11": ("phi11:1,2,3", 11),
    "C12": ("phi12:1", 12),
}


def theorem1_report(radius: int = 6, cross_check: bool = True,
                    threads: int = 1) -> dict:
    """Census every constructed family and compare the measured ball classes
    with the claimed single class."""
    if radius < 3:
        raise InvalidParamsError(f"theorem reports need radius >= 3, got {radius}")
    rows = []
    for case, (spec, claimed) in REPORT_FAMILIES.items():
        config = parse_family(spec)
        cens = census(config, radius, cross_check=cross_check, threads=threads)
        matches = cens.uniform and cens.modal_class == claimed
        rows.append({
            "case": case,
            "family": spec,
            "claimed_class": claimed,
            "counts": {str(c): n for c, n in sorted(cens.counts.items())},
            "modal_class": cens.modal_class,
            "uniform": cens.uniform,
            "matches_claim": matches,
            "witnesses": [{"vertex": format_word(w), "class": c}
                          for w, c in cens.exceptions[:5]],
        })
    return {
        "report": "theorem1",
        "radius": radius,
        "rows": rows,
        "all_match": all(r["matches_claim"] for r in rows),
    }


#: Ground-state cases: named set, committed coupling, families the statement
#: lists there, extra reference families, and one family expected to fail.
THEOREM2_CASES = (
    ("B.1", "A1_tilde", ["ti:1"], [], "distinct:0"),
    ("B.2", "A2_tilde", ["parity2:A=1|1,2"], [], "ti:1"),
    ("B.3", "A5_tilde", ["parity2:A=1,2,3,4|1,2"], [], "ti:1"),
    ("B.4", "A6_tilde", ["phi6:1,2,3|1,2,3,4"], [], "ti:1"),
    ("B.5", "A9_tilde", ["phi9:1,3"], [], "ti:1"),
    ("B.6", "A12_tilde", ["phi12:1"], ["distinct:0"], "ti:1"),
    ("C.1", "B", ["ti:1", "parity2:A=1|1,2"], [], "parity2:A=1,2,3,4|1,2"),
    ("C.2", "B0", ["ti:1", "parity2:A=1,2,3,4|1,2"], [], "parity2:A=1|1,2"),
    ("C.3", "B1", ["parity2:A=1|1,2", "phi9:1,3"], [], "ti:1"),
    ("C.4", "B2", ["phi9:1,3", "phi6:1,2,3|1,2,3,4"], [], "ti:1"),
    ("C.5", "B3", ["phi6:1,2,3|1,2,3,4", "phi12:1"], ["distinct:0"], "ti:1"),
    ("C.6", "A7A8",
     ["parity2:A=1,2,3,4|1,2", "xi7:1,2,3", "psi7:A=1,2,3|1,2,3",
      "phi8:1,2;3;4|1,2,3,4", "phi12:1"],
     [], "ti:1"),
)


def _ground_entry(spec: str, role: str, j: Coupling, radius: int) -> dict:
    verdict = is_ground_state(parse_family(spec), j, radius)
    expected = role != "exclusion"
    return {
        "family": spec,
        "role": role,
        "pass": verdict.holds,
        "expected_pass": expected,
        "as_expected": verdict.holds == expected,
        "violation_count": verdict.violation_count,
        "witnesses": [{"vertex": format_word(w), "class": c, "gap": str(g)}
                      for w, c, g in verdict.violations[:3]],
    }


def theorem2_report(radius: int = 6, seed: int = 7,
                    random_samples: int = 20) -> dict:
    """Ground-state verdicts at one committed coupling per named region, plus
    the zero-coupling case where every configuration qualifies."""
    if radius < 3:
        raise InvalidParamsError(f"theorem reports need radius >= 3, got {radius}")
    cases = []

    j0 = coupling(0, 0)
    rc_radius = min(radius, 5)
    zero_ok = True
    for k in range(random_samples):
        cfg = random_config(rc_radius, seed + k)
        if not is_ground_state(cfg, j0, rc_radius).holds:
            zero_ok = False
    cases.append({
        "case": "A",
        "set": "zero",
        "j": ["0", "0"],
        "argmin": sorted(minimizing_classes(j0)),
        "random_configs": random_samples,
        "random_radius": rc_radius,
        "all_pass": zero_ok,
    })

    for case, set_name, claimed, references, exclusion in THEOREM2_CASES:
        j = coupling(*SET_SAMPLES[set_name])
        sets = theorem2_sets(j)
        if set_name == "A7A8":
            in_set = sets["A7"] and sets["A8"]
        else:
            in_set = sets[set_name]
        checks = [_ground_entry(spec, "claimed", j, radius) for spec in claimed]
        checks += [_ground_entry(spec, "reference", j, radius)
                   for spec in references]
        checks.append(_ground_entry(exclusion, "exclusion", j, radius))
        cases.append({
            "case": case,
            "set": set_name,
            "j": [str(j.j1), str(j.j2)],
            "in_set": bool(in_set),
            "argmin": sets["argmin"],
            "checks": checks,
        })

    return {
        "report": "theorem2",
        "radius": radius,
        "seed": seed,
        "cases": cases,
        "all_as_expected": all(
            entry["as_expected"]
            for case in cases if "checks" in case
            for entry in case["checks"]),
    }
