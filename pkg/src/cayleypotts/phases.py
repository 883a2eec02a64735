"""Exact phase diagram of the twelve class-energy forms over the coupling plane.

Each class energy is a homogeneous linear form in (j1, j2), so the set of
minimizing classes is constant along rays from the origin and the plane
splits into finitely many closed sectors.  Everything here is computed in
exact rational arithmetic: candidate boundary rays come from pairwise
equality of forms, sectors are probed at interior directions, and adjacent
sectors with the same minimizer set are merged.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .energy import (
    NUM_CLASSES,
    Coupling,
    class_coefficients,
    class_energy,
    coupling,
)
from .errors import InvalidParamsError

ALL_CLASSES = frozenset(range(1, NUM_CLASSES + 1))


def minimizing_classes(j: Coupling) -> frozenset:
    """Classes whose energy form attains the minimum at j."""
    values = {cls: class_energy(cls, j) for cls in range(1, NUM_CLASSES + 1)}
    lowest = min(values.values())
    return frozenset(cls for cls, v in values.items() if v == lowest)


# --- primitive integer directions --------------------------------------------

def normalize_direction(dx, dy) -> tuple:
    """Scale a nonzero rational direction to coprime integers."""
    fx, fy = Fraction(dx), Fraction(dy)
    if fx == 0 and fy == 0:
        raise InvalidParamsError("the zero vector has no direction")
    den = fx.denominator * fy.denominator
    ix = fx.numerator * (den // fx.denominator)
    iy = fy.numerator * (den // fy.denominator)
    g = math.gcd(abs(ix), abs(iy))
    return (ix // g, iy // g)


def _half(d: tuple) -> int:
    # 0 for the upper half plane including the positive x-axis
    dx, dy = d
    if dy > 0 or (dy == 0 and dx > 0):
        return 0
    return 1


def _angle_cmp(a: tuple, b: tuple) -> int:
    """Counterclockwise order starting at the positive x-axis."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _ccw_between(d: tuple, start: tuple, end: tuple) -> bool:
    """Is direction d inside [start, end) going counterclockwise?"""
    if _angle_cmp(start, end) < 0:
        return _angle_cmp(start, d) <= 0 and _angle_cmp(d, end) < 0
    # the sector wraps past the positive x-axis
    return _angle_cmp(start, d) <= 0 or _angle_cmp(d, end) < 0


@dataclass(frozen=True)
class Sector:
    start: tuple  # primitive integer direction, inclusive boundary ray
    end: tuple  # exclusive; belongs to the next sector
    interior_min: frozenset
    start_ray_min: frozenset


@dataclass(frozen=True)
class Fan:
    sectors: tuple
    origin_min: frozenset = ALL_CLASSES

    def lookup(self, j: Coupling) -> frozenset:
        """Minimizer set at j, read off the fan (not recomputed)."""
        if j.j1 == 0 and j.j2 == 0:
            return self.origin_min
        d = normalize_direction(j.j1, j.j2)
        for s in self.sectors:
            if d == s.start:
                return s.start_ray_min
            if _ccw_between(d, s.start, s.end):
                return s.interior_min
        raise AssertionError(f"direction {d} missed every sector")


def _candidate_rays() -> list:
    dirs = set()
    coeffs = [class_coefficients(c) for c in range(1, NUM_CLASSES + 1)]
    for i in range(len(coeffs)):
        for k in range(i + 1, len(coeffs)):
            da = coeffs[i][0] - coeffs[k][0]
            db = coeffs[i][1] - coeffs[k][1]
            if da == 0 and db == 0:
                continue
            # the two opposite rays where form i equals form k
            dirs.add(normalize_direction(db, -da))
            dirs.add(normalize_direction(-db, da))
    return sorted(dirs, key=functools.cmp_to_key(_angle_cmp))


@functools.lru_cache(maxsize=1)
def compute_fan() -> Fan:
    """Split the plane at every pairwise-equality ray, evaluate the minimizer
    set on each ray and between consecutive rays, then merge sectors whose
    interiors agree and whose shared ray adds nothing."""
    rays = _candidate_rays()
    pieces = []
    for idx, start in enumerate(rays):
        end = rays[(idx + 1) % len(rays)]
        mid = (start[0] + end[0], start[1] + end[1])  # inside: gap is < pi
        pieces.append(Sector(
            start=start,
            end=end,
            interior_min=minimizing_classes(coupling(*mid)),
            start_ray_min=minimizing_classes(coupling(*start)),
        ))
    merged: list[Sector] = []
    for piece in pieces:
        if (merged
                and merged[-1].interior_min == piece.interior_min
                and piece.start_ray_min == piece.interior_min):
            merged[-1] = Sector(merged[-1].start, piece.end,
                                merged[-1].interior_min, merged[-1].start_ray_min)
        else:
            merged.append(piece)
    # the first and last piece may belong to the same sector across the seam
    if (len(merged) > 1
            and merged[0].interior_min == merged[-1].interior_min
            and merged[0].start_ray_min == merged[0].interior_min):
        merged[-1] = Sector(merged[-1].start, merged[0].end,
                            merged[-1].interior_min, merged[-1].start_ray_min)
        merged.pop(0)
    # deterministic start: the sector whose start ray is first in angle order
    first = min(range(len(merged)),
                key=lambda i: functools.cmp_to_key(_angle_cmp)(merged[i].start))
    return Fan(sectors=tuple(merged[first:] + merged[:first]))


# --- region claims kept for comparison ----------------------------------------
#
# Closed-form descriptions of the twelve regions as they circulate; several
# disagree with the argmin definition and the comparison report measures that.

def claimed_region_contains(cls: int, j: Coupling) -> bool:
    j1, j2 = j.j1, j.j2
    if cls == 1:
        return (j1 <= 0 and j2 <= 0) or (j2 >= 0 and j1 <= -6 * j2)
    if cls == 2:
        return j1 >= 0 and -6 * j2 <= j1 <= -4 * j2
    if cls in (3, 4, 10):
        return j1 == 0 and j2 == 0
    if cls == 5:
        return j1 >= 0 and j2 <= 0
    if cls == 6:
        return j2 >= 0 and -2 * j2 <= j1 <= 0
    if cls in (7, 8, 11):
        return j1 >= 0 and j2 == 0
    if cls == 9:
        return j2 <= 0 and -4 * j2 <= j1 <= -2 * j2
    if cls == 12:
        return j1 <= 0 and j2 <= 0
    raise InvalidParamsError(f"class index {cls!r} outside 1..12")


#: Probe couplings checked first so the canonical disagreement witnesses land
#: at the head of each witness list.
_NAMED_PROBES = (
    (-1, -1), (4, -1), (-5, 1), (-3, 1), (1, 1), (-7, 0),
    (0, -1), (1, 0), (0, 1), (-6, 1), (-4, 1), (-2, 1),
)


def _default_samples() -> list:
    """Deterministic sample set: the named probes, a half-integer grid over
    [-7, 7]^2, and every boundary ray of the computed fan."""
    half = Fraction(1, 2)
    points = [coupling(*p) for p in _NAMED_PROBES]
    seen = set(points)
    candidates = [coupling(a * half, b * half)
                  for a in range(-14, 15) for b in range(-14, 15)]
    candidates.extend(coupling(*s.start) for s in compute_fan().sectors)
    for j in candidates:
        if j not in seen:
            seen.add(j)
            points.append(j)
    return points


def region_comparison_report(samples: Optional[Sequence] = None) -> dict:
    """Compare the closed-form region claims against argmin membership on a
    deterministic sample set; collect disagreement witnesses per class."""
    pts = list(samples) if samples is not None else _default_samples()
    per_class = {}
    disagreeing = []
    for cls in range(1, NUM_CLASSES + 1):
        witnesses = []
        disagreements = 0
        for j in pts:
            claimed = claimed_region_contains(cls, j)
            actual = cls in minimizing_classes(j)
            if claimed != actual:
                disagreements += 1
                if len(witnesses) < 5:
                    witnesses.append({
                        "j": [str(j.j1), str(j.j2)],
                        "claimed": claimed,
                        "argmin": actual,
                    })
        per_class[str(cls)] = {
            "checked": len(pts),
            "disagreements": disagreements,
            "witnesses": witnesses,
        }
        if disagreements:
            disagreeing.append(cls)
    return {
        "samples": len(pts),
        "disagreeing_classes": disagreeing,
        "agreeing_classes": [c for c in range(1, NUM_CLASSES + 1)
                             if c not in disagreeing],
        "per_class": per_class,
    }


# --- named boundary sets --------------------------------------------------------

#: Committed sample couplings, one per named set.
SET_SAMPLES = {
    "zero": (0, 0),
    "A1_tilde": (-1, -1),
    "A2_tilde": (-5, 1),
    "A5_tilde": (1, -1),
    "A6_tilde": (-1, 1),
    "A9_tilde": (-3, 1),
    "A12_tilde": (1, 1),
    "B": (-6, 1),
    "B0": (0, -1),
    "B1": (-4, 1),
    "B2": (-2, 1),
    "B3": (0, 1),
    "A7A8": (1, 0),
}


def theorem2_sets(j: Coupling) -> dict:
    """Membership of j in the named boundary sets and trimmed interiors used
    by the ground-state classification."""
    am = minimizing_classes(j)
    b = {1, 2} <= am
    b0 = {1, 5} <= am
    b1 = {2, 9} <= am
    b2 = {9, 6} <= am
    b3 = {6, 12} <= am
    a7 = 7 in am
    a8 = 8 in am
    return {
        "argmin": sorted(am),
        "B": b,
        "B0": b0,
        "B1": b1,
        "B2": b2,
        "B3": b3,
        "A7": a7,
        "A8": a8,
        "A1_tilde": 1 in am and not b and not b0,
        "A2_tilde": 2 in am and not b0 and not b1,
        "A5_tilde": 5 in am and not b0 and not a7,
        "A6_tilde": 6 in am and not b2 and not b3,
        "A9_tilde": 9 in am and not b1 and not b2,
        "A12_tilde": 12 in am and not b3 and not a7,
    }


def fan_to_jsonable(fan: Fan) -> list:
    return [
        {
            "start": list(s.start),
            "end": list(s.end),
            "interior_min": sorted(s.interior_min),
            "start_ray_min": sorted(s.start_ray_min),
        }
        for s in fan.sectors
    ]
