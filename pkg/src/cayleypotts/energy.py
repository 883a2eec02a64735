"""Local energies of unit balls and the two-coupling Hamiltonian built on them.

A unit ball is a center plus its four neighbors.  Its interaction energy is

    (j1 / 2) * (# center-leaf coincidences) + j2 * (# equal unordered leaf pairs):

the factor 1/2 is because each edge of the tree belongs to exactly two unit
balls, while each distance-2 pair has a unique midpoint and is counted once.
The pair (# coincidences, # equal pairs) can take exactly twelve values; the
class index of a ball is its position in that list and determines its energy
as a linear form in (j1, j2).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, NamedTuple

from .errors import (
    BoundaryViolationError,
    InfeasibleSignatureError,
    InvalidParamsError,
)
from .words import Word, ball_vertices, format_word, neighbors


class Ball(NamedTuple):
    center: int
    leaves: tuple  # 4 spin values in neighbor order


class Signature(NamedTuple):
    center_matches: int  # leaves equal to the center, 0..4
    equal_leaf_pairs: int  # unordered equal pairs among the leaves, 0..6


#: The twelve realizable signatures in their conventional class order.
SIGNATURE_BY_CLASS = {
    1: Signature(4, 6),
    2: Signature(3, 3),
    3: Signature(2, 2),
    4: Signature(1, 3),
    5: Signature(0, 6),
    6: Signature(1, 0),
    7: Signature(0, 3),
    8: Signature(0, 1),
    9: Signature(2, 1),
    10: Signature(1, 1),
    11: Signature(0, 2),
    12: Signature(0, 0),
}

CLASS_BY_SIGNATURE = {sig: cls for cls, sig in SIGNATURE_BY_CLASS.items()}

NUM_CLASSES = 12


def signature(ball: Ball) -> Signature:
    if len(ball.leaves) != 4:
        raise InvalidParamsError(f"a unit ball has 4 leaves, got {len(ball.leaves)}")
    c = ball.center
    ls = ball.leaves
    matches = sum(1 for v in ls if v == c)
    pairs = sum(1 for i in range(4) for j in range(i + 1, 4) if ls[i] == ls[j])
    return Signature(matches, pairs)


def class_of(sig: Signature) -> int:
    try:
        return CLASS_BY_SIGNATURE[Signature(*sig)]
    except KeyError:
        raise InfeasibleSignatureError(f"no 4-leaf ball realizes signature {tuple(sig)}")


class Coupling(NamedTuple):
    j1: Fraction
    j2: Fraction


def coupling(j1, j2) -> Coupling:
    return Coupling(Fraction(j1), Fraction(j2))


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Integer or p/q only; float syntax is rejected to keep exactness."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise InvalidParamsError(f"bad rational {text!r}: expected an integer or p/q")
    return Fraction(text)


def parse_coupling(text: str) -> Coupling:
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidParamsError(f"bad coupling {text!r}: expected j1,j2")
    return Coupling(parse_rational(parts[0]), parse_rational(parts[1]))


def format_rational(q: Fraction) -> str:
    return str(q)


def class_coefficients(cls: int) -> tuple:
    """(j1 weight, j2 weight) of the class energy form."""
    sig = SIGNATURE_BY_CLASS.get(cls)
    if sig is None:
        raise InfeasibleSignatureError(f"class index {cls!r} outside 1..12")
    return (Fraction(sig.center_matches, 2), Fraction(sig.equal_leaf_pairs))


def class_energy(cls: int, j: Coupling) -> Fraction:
    a, b = class_coefficients(cls)
    return a * j.j1 + b * j.j2


def ball_energy(ball: Ball, j: Coupling) -> Fraction:
    """Energy by direct counting over the ball's 4 edges and 6 leaf pairs.

    Deliberately does not go through the class table; the two routes
    cross-check each other.
    """
    if len(ball.leaves) != 4:
        raise InvalidParamsError(f"a unit ball has 4 leaves, got {len(ball.leaves)}")
    edge_hits = 0
    for v in ball.leaves:
        if v == ball.center:
            edge_hits += 1
    pair_hits = 0
    ls = ball.leaves
    for i in range(4):
        for k in range(i + 1, 4):
            if ls[i] == ls[k]:
                pair_hits += 1
    return Fraction(edge_hits, 2) * j.j1 + pair_hits * j.j2


def ball_at(value_of: Callable, center: Word) -> Ball:
    return Ball(value_of(center), tuple(value_of(y) for y in neighbors(center)))


# --- finite-volume and relative energies -------------------------------------

def finite_volume_energy(value_of: Callable, radius: int, j: Coupling) -> Fraction:
    """Sum over edges and distance-2 pairs with both ends inside the ball of
    the given radius.  Edges pair each non-root vertex with its parent;
    distance-2 pairs are exactly the neighbor pairs of each midpoint in the
    next-smaller ball."""
    vs = ball_vertices(radius)
    total = Fraction(0)
    for x in vs[1:]:
        if value_of(x) == value_of(x[:-1]):
            total += j.j1
    if radius >= 1:
        for mid in ball_vertices(radius - 1):
            around = [value_of(y) for y in neighbors(mid)]
            for i in range(4):
                for k in range(i + 1, 4):
                    if around[i] == around[k]:
                        total += j.j2
    return total


def difference_set(sigma_of: Callable, phi_of: Callable, radius: int) -> list:
    """Vertices of the radius ball where the two configurations differ.
    Differences in the two outermost shells are rejected: every edge and
    distance-2 pair touching the true difference set must lie inside the
    scanned volume."""
    diffs = [x for x in ball_vertices(radius) if sigma_of(x) != phi_of(x)]
    for x in diffs:
        if len(x) > radius - 2:
            raise BoundaryViolationError(
                f"configurations differ at {format_word(x)}, within two shells "
                f"of the radius-{radius} boundary")
    return diffs


def relative_energy(sigma_of: Callable, phi_of: Callable, j: Coupling,
                    radius: int) -> Fraction:
    """Energy of sigma relative to phi, summed over every edge and distance-2
    pair that touches a vertex where they differ."""
    diffs = difference_set(sigma_of, phi_of, radius)
    edges = set()
    pairs = set()
    for x in diffs:
        for y in neighbors(x):
            edges.add(frozenset((x, y)))
            for z in neighbors(y):
                if z != x:
                    pairs.add(frozenset((x, z)))
    total = Fraction(0)
    for e in edges:
        a, b = tuple(e)
        total += j.j1 * ((sigma_of(a) == sigma_of(b)) - (phi_of(a) == phi_of(b)))
    for p in pairs:
        a, b = tuple(p)
        total += j.j2 * ((sigma_of(a) == sigma_of(b)) - (phi_of(a) == phi_of(b)))
    return total


def relative_energy_by_balls(sigma_of: Callable, phi_of: Callable, j: Coupling,
                             radius: int) -> Fraction:
    """The same quantity as a sum of per-ball energy differences over the
    balls meeting the difference set.  Independent route: equality with
    relative_energy is the decomposition the whole classification rests on."""
    diffs = difference_set(sigma_of, phi_of, radius)
    centers = set(diffs)
    for x in diffs:
        centers.update(neighbors(x))
    total = Fraction(0)
    for c in sorted(centers, key=lambda w: (len(w), w)):
        total += ball_energy(ball_at(sigma_of, c), j)
        total -= ball_energy(ball_at(phi_of, c), j)
    return total
