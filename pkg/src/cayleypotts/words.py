"""Reduced words over four order-2 generators and the regular tree they span.

Vertices of the tree are reduced words: tuples of letters from {1, 2, 3, 4}
with no immediate repetition.  The empty tuple is the root.  Each letter is
its own inverse, so the four neighbors of a word are obtained by appending a
letter on the right (appending the last letter cancels it and yields the
parent).  Words are enumerated in canonical (length, lexicographic) order
throughout the package.
"""

from __future__ import annotations

import functools
import os
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import InvalidGeneratorError, NonReducedWordError, RadiusCapError

Word = tuple  # tuple of ints in 1..4

GENERATORS = (1, 2, 3, 4)

#: Largest radius enumerated by default; ~118k vertices.  Override per call or
#: via the CAYLEYPOTTS_RADIUS_CAP environment variable (honored by the CLI).
DEFAULT_RADIUS_CAP = 10

_ENV_CAP = "CAYLEYPOTTS_RADIUS_CAP"


def radius_cap() -> int:
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return DEFAULT_RADIUS_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise RadiusCapError(f"{_ENV_CAP} must be an integer, got {raw!r}")
    if cap < 0:
        raise RadiusCapError(f"{_ENV_CAP} must be non-negative, got {cap}")
    return cap


def _check_letters(letters: Iterable[int]) -> None:
    for t in letters:
        if t not in (1, 2, 3, 4):
            raise InvalidGeneratorError(f"letter {t!r} outside 1..4")


def reduce_word(letters: Iterable[int]) -> Word:
    """Cancel adjacent equal letters until none remain."""
    out: list[int] = []
    for t in letters:
        if t not in (1, 2, 3, 4):
            raise InvalidGeneratorError(f"letter {t!r} outside 1..4")
        if out and out[-1] == t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def multiply(x: Word, y: Word) -> Word:
    """Group product: concatenate and reduce.  Cancellation only happens at
    the seam, so this walks the seam instead of re-reducing everything."""
    xs = list(x)
    i = 0
    n = len(y)
    while xs and i < n and xs[-1] == y[i]:
        xs.pop()
        i += 1
    return tuple(xs) + tuple(y[i:])


def inverse(x: Word) -> Word:
    # each letter is an involution, so inverting just reverses
    return tuple(reversed(x))


def letter_count(x: Word, j: int) -> int:
    if j not in (1, 2, 3, 4):
        raise InvalidGeneratorError(f"letter {j!r} outside 1..4")
    return sum(1 for t in x if t == j)


def distance(x: Word, y: Word) -> int:
    """Graph distance: length of x^{-1} y."""
    return len(multiply(inverse(x), y))


def neighbors(x: Word) -> tuple:
    """The four adjacent words, ordered by appended letter."""
    return tuple(multiply(x, (t,)) for t in GENERATORS)


def parent(x: Word) -> Optional[Word]:
    """Drop the last letter; None for the root."""
    if not x:
        return None
    return x[:-1]


class Neighborhood(NamedTuple):
    center: Word
    neighbors: tuple
    parent: Optional[Word]


def neighborhood(x: Word) -> Neighborhood:
    _check_letters(x)
    return Neighborhood(tuple(x), neighbors(x), parent(x))


def _check_radius(radius: int, cap: Optional[int]) -> None:
    if radius < 0:
        raise RadiusCapError(f"radius must be non-negative, got {radius}")
    limit = radius_cap() if cap is None else cap
    if radius > limit:
        raise RadiusCapError(f"radius {radius} exceeds cap {limit}")


@functools.lru_cache(maxsize=None)
def _layers(radius: int) -> tuple:
    if radius == 0:
        return (((),),)
    prev = _layers(radius - 1)
    last = prev[-1]
    layer = []
    for w in last:
        for t in GENERATORS:
            if not w or w[-1] != t:
                layer.append(w + (t,))
    # extension order already yields lexicographic order within the layer
    return prev + (tuple(layer),)


def sphere(radius: int, cap: Optional[int] = None) -> list:
    """Words of exactly the given length, lexicographically ordered."""
    _check_radius(radius, cap)
    return list(_layers(radius)[radius])


def ball_vertices(radius: int, cap: Optional[int] = None) -> list:
    """All words of length <= radius in (length, lex) order."""
    _check_radius(radius, cap)
    out: list[Word] = []
    for layer in _layers(radius):
        out.extend(layer)
    return out


def ball_size(radius: int) -> int:
    """1 + sum of 4 * 3^(n-1) for n = 1..radius."""
    if radius < 0:
        raise RadiusCapError(f"radius must be non-negative, got {radius}")
    n = 1
    width = 4
    for _ in range(radius):
        n += width
        width *= 3
    return n


def iter_ball(radius: int, cap: Optional[int] = None) -> Iterator[Word]:
    return iter(ball_vertices(radius, cap))


# --- canonical-order index arithmetic -------------------------------------
#
# In (length, lex) order the root is index 0, its children are 1..4, and every
# non-root vertex has exactly 3 children laid out contiguously, so parent and
# child indices are pure arithmetic.  The compiled census kernel relies on
# this layout; canonical_index gives the same numbering without enumerating.

def parent_index(i: int) -> int:
    if i <= 0:
        raise ValueError("the root has no parent")
    if i <= 4:
        return 0
    return (i - 5) // 3 + 1


def child_indices(i: int) -> tuple:
    if i < 0:
        raise ValueError("negative vertex index")
    if i == 0:
        return (1, 2, 3, 4)
    base = 5 + 3 * (i - 1)
    return (base, base + 1, base + 2)


def canonical_index(x: Word) -> int:
    """Position of a word in the (length, lex) enumeration."""
    _check_letters(x)
    if not x:
        return 0
    n = len(x)
    idx = ball_size(n - 1)
    width = 4 * 3 ** (n - 1)
    # first letter picks one of 4 equal blocks, later letters one of 3
    width //= 4
    idx += (x[0] - 1) * width
    for prev, t in zip(x, x[1:]):
        if t == prev:
            raise NonReducedWordError(f"word {x!r} is not reduced")
        width //= 3
        allowed = [g for g in GENERATORS if g != prev]
        idx += allowed.index(t) * width
    return idx


# --- text form --------------------------------------------------------------

def format_word(x: Word) -> str:
    """Digits, or "e" for the root."""
    if not x:
        return "e"
    return "".join(str(t) for t in x)


def parse_word(text: str) -> Word:
    if text == "e":
        return ()
    if not text or not text.isdigit():
        raise NonReducedWordError(f"bad word text {text!r}: expected 'e' or digits 1-4")
    letters = []
    for ch in text:
        t = int(ch)
        if t not in (1, 2, 3, 4):
            raise InvalidGeneratorError(f"bad letter {ch!r} in word text {text!r}")
        letters.append(t)
    for a, b in zip(letters, letters[1:]):
        if a == b:
            raise NonReducedWordError(f"word text {text!r} is not reduced")
    return tuple(letters)
