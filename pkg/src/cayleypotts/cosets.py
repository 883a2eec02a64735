"""Coset maps on the word group: parity subgroups of small index, two
infinite-index constructions, and homomorphisms onto the symmetric group S3.

Every map here sends a word to a hashable coset key; configurations that
factor through a map are constant on its fibers.  Named-map syntax for the
CLI and the periodicity checkers:

    H{1,2}        parity of the letter count over a subset  (index 2)
    G2            length parity                              (index 2)
    G4{1,2,3}     (subset parity, length parity)             (index 4)
    G6{1,2,3}     three single-letter parities               (index 8)
    G8{1,2;3;4}   pair parity plus two single parities       (index 8)
    S3C10, S3C11  kernel of a letter-to-involution homomorphism (index 6)
    F0            signed index along the {1,2}-projection    (infinite)
    U             coset of the cyclic group generated by a1*a2 (infinite)
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Optional, Sequence

from .errors import (
    DegenerateSubsetError,
    InvalidGeneratorError,
    InvalidParamsError,
    InvalidSubsetError,
    UnknownNameError,
)
from .words import Word, ball_vertices, letter_count


def _check_subset(A) -> frozenset:
    subset = frozenset(A)
    if not subset:
        raise InvalidSubsetError("empty generator subset")
    if len(subset) != len(tuple(A)):
        raise InvalidSubsetError(f"repeated index in subset {tuple(A)!r}")
    for j in subset:
        if j not in (1, 2, 3, 4):
            raise InvalidGeneratorError(f"index {j!r} outside 1..4")
    return subset


def subset_parity(x: Word, A) -> int:
    """Total count of letters from A, mod 2.  Index-2 coset map."""
    subset = _check_subset(A)
    return sum(letter_count(x, j) for j in subset) % 2


def length_parity(x: Word) -> int:
    return len(x) % 2


def parity_pair(x: Word, A) -> tuple:
    """(subset parity, length parity).  Index-4 coset map; A must not be all
    four letters or the two bits coincide."""
    subset = _check_subset(A)
    if len(subset) == 4:
        raise DegenerateSubsetError(
            "subset {1,2,3,4} makes subset parity equal length parity")
    return (subset_parity(x, subset), length_parity(x))


def pair_coset_index(bits: tuple) -> int:
    """Two-bit label, subset parity as the high bit."""
    return 2 * bits[0] + bits[1]


def grouped_parity(x: Word, groups: Sequence) -> tuple:
    """One parity bit per disjoint generator group, e.g. ({1},{2},{3}) or
    ({1,2},{3},{4}).  Index-8 coset maps for three groups."""
    seen: set = set()
    out = []
    for g in groups:
        subset = _check_subset(g)
        if subset & seen:
            raise InvalidSubsetError(f"groups overlap at {sorted(subset & seen)}")
        seen |= subset
        out.append(subset_parity(x, subset))
    return tuple(out)


def triple_coset_index(bits: tuple) -> int:
    """Three-bit label, first group as the most significant bit."""
    return 4 * bits[0] + 2 * bits[1] + bits[2]


# --- S3-valued homomorphisms -------------------------------------------------

@dataclass(frozen=True, order=True)
class Permutation3:
    """Permutation of {1,2,3} stored as the image tuple (p(1), p(2), p(3))."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise InvalidParamsError(f"not a permutation of 1..3: {self.images!r}")

    def apply(self, v: int) -> int:
        return self.images[v - 1]

    def then(self, other: "Permutation3") -> "Permutation3":
        """Composite that applies self first, then other."""
        return Permutation3(tuple(other.apply(v) for v in self.images))

    def is_involution(self) -> bool:
        return self.then(self) == IDENTITY


IDENTITY = Permutation3((1, 2, 3))

#: The six permutations in a fixed order; an image's position here is its label.
PERMS = (
    IDENTITY,
    Permutation3((1, 3, 2)),
    Permutation3((3, 2, 1)),
    Permutation3((3, 1, 2)),
    Permutation3((2, 3, 1)),
    Permutation3((2, 1, 3)),
)

PERM_LABEL = {p: i for i, p in enumerate(PERMS)}


def check_letter_assignment(assignment: Mapping) -> dict:
    out = {}
    for t in (1, 2, 3, 4):
        if t not in assignment:
            raise InvalidParamsError(f"letter {t} missing from assignment")
        p = assignment[t]
        if not isinstance(p, Permutation3):
            raise InvalidParamsError(f"assignment for letter {t} is not a permutation")
        if not p.is_involution():
            raise InvalidParamsError(
                f"letter {t} maps to a non-involution {p.images}; order-2 letters "
                "need order-2 images for the map to be well defined")
        out[t] = p
    return out


def word_image(x: Word, assignment: Mapping) -> Permutation3:
    """Image of a word under the letter assignment; the first letter acts first."""
    cur = IDENTITY
    for t in x:
        if t not in (1, 2, 3, 4):
            raise InvalidGeneratorError(f"letter {t!r} outside 1..4")
        cur = cur.then(assignment[t])
    return cur


#: letters 1,2 -> the involution fixing 1; letters 3,4 -> the one fixing 2
C10_ASSIGNMENT = {1: PERMS[1], 2: PERMS[1], 3: PERMS[2], 4: PERMS[2]}
#: letters 1,2 -> the involution fixing 3; letters 3,4 -> the one fixing 1
C11_ASSIGNMENT = {1: PERMS[5], 2: PERMS[5], 3: PERMS[1], 4: PERMS[1]}


def word_image_label(x: Word, assignment: Mapping) -> int:
    return PERM_LABEL[word_image(x, assignment)]


# --- projection to the subgroup generated by letters 1 and 2 ----------------

def two_letter_projection(x: Word) -> Word:
    """Delete letters 3 and 4, then reduce.  A homomorphism onto the infinite
    dihedral group generated by letters 1 and 2; images are alternating."""
    out: list[int] = []
    for t in x:
        if t not in (1, 2, 3, 4):
            raise InvalidGeneratorError(f"letter {t!r} outside 1..4")
        if t in (1, 2):
            if out and out[-1] == t:
                out.pop()
            else:
                out.append(t)
    return tuple(out)


def projection_index(x: Word) -> int:
    """Signed length of the projection: positive when it starts with letter 1,
    negative when it starts with letter 2, zero for the kernel."""
    img = two_letter_projection(x)
    if not img:
        return 0
    return len(img) if img[0] == 1 else -len(img)


# --- cosets of the cyclic group generated by a1*a2 ---------------------------

def cyclic_coset_representative(x: Word) -> Word:
    """Shortest element of the coset {(a1 a2)^n x : n in Z}, ties broken
    lexicographically.

    Left multiplication by powers of a1*a2 only reshapes the maximal
    alternating-{1,2} prefix; its length parity is the invariant.  An even
    prefix cancels away entirely, an odd one shrinks to the single letter 1
    (lexicographically below 2), so the minimum is immediate.
    """
    k = 0
    expect = 0  # 0: either of 1,2 starts the prefix
    for t in x:
        if t in (1, 2) and (expect == 0 or t == expect):
            k += 1
            expect = 2 if t == 1 else 1
        else:
            break
    tail = tuple(x[k:])
    if k % 2 == 0:
        return tail
    return (1,) + tail


class CyclicCosetTable:
    """Grow-only numbering of the cosets above, in first-encounter order over
    the canonical (length, lex) word enumeration.

    Arbitrary queries are served by scanning that enumeration up to the length
    of the queried representative, so indices never depend on query order.
    """

    def __init__(self):
        self._index: dict = {(): 0}
        self._scanned_radius = 0
        self._lock = threading.Lock()

    def index(self, x: Word) -> int:
        rep = cyclic_coset_representative(x)
        need = len(rep)
        with self._lock:
            if need > self._scanned_radius:
                for w in ball_vertices(need):
                    if len(w) <= self._scanned_radius:
                        continue
                    if cyclic_coset_representative(w) == w and w not in self._index:
                        self._index[w] = len(self._index)
                self._scanned_radius = need
            return self._index[rep]

    def representatives(self) -> list:
        return sorted(self._index, key=lambda w: (len(w), w))

    def __len__(self) -> int:
        return len(self._index)


# --- named-map registry ------------------------------------------------------

@dataclass(frozen=True)
class CosetMap:
    name: str
    key: Callable
    index: Optional[int]  # subgroup index; None when infinite

    def __call__(self, x: Word) -> Hashable:
        return self.key(x)


_SUBSET_RE = re.compile(r"^\{([1-4](,[1-4])*)\}$")
_GROUPS_RE = re.compile(r"^\{([1-4](,[1-4])*(;[1-4](,[1-4])*)*)\}$")


def _parse_subset(body: str, name: str) -> tuple:
    m = _SUBSET_RE.match(body)
    if not m:
        raise UnknownNameError(f"bad subset syntax in map name {name!r}")
    return tuple(int(s) for s in m.group(1).split(","))


def named_coset_map(name: str) -> CosetMap:
    """Resolve one of the documented map names to a keying function."""
    if name == "G2":
        return CosetMap(name, length_parity, 2)
    if name == "F0":
        return CosetMap(name, projection_index, None)
    if name == "U":
        return CosetMap(name, cyclic_coset_representative, None)
    if name == "S3C10":
        return CosetMap(name, lambda x: word_image_label(x, C10_ASSIGNMENT), 6)
    if name == "S3C11":
        return CosetMap(name, lambda x: word_image_label(x, C11_ASSIGNMENT), 6)
    if name.startswith("H"):
        A = _parse_subset(name[1:], name)
        subset = _check_subset(A)
        return CosetMap(name, lambda x: subset_parity(x, subset), 2)
    if name.startswith("G4"):
        A = _parse_subset(name[2:], name)
        subset = _check_subset(A)
        if len(subset) == 4:
            raise DegenerateSubsetError(
                "G4 over all four letters degenerates to G2")
        return CosetMap(name, lambda x: parity_pair(x, subset), 4)
    if name.startswith("G6"):
        A = _parse_subset(name[2:], name)
        if len(A) != 3 or len(set(A)) != 3:
            raise UnknownNameError(f"G6 needs three distinct letters, got {name!r}")
        groups = tuple(frozenset((j,)) for j in A)
        return CosetMap(name, lambda x: grouped_parity(x, groups), 8)
    if name.startswith("G8"):
        body = name[2:]
        m = _GROUPS_RE.match(body)
        if not m:
            raise UnknownNameError(f"bad group syntax in map name {name!r}")
        parts = m.group(1).split(";")
        if len(parts) != 3:
            raise UnknownNameError(f"G8 needs three groups, got {name!r}")
        groups = tuple(tuple(int(s) for s in p.split(",")) for p in parts)
        if len(groups[0]) != 2 or len(groups[1]) != 1 or len(groups[2]) != 1:
            raise UnknownNameError(
                f"G8 groups must be a pair and two singles, got {name!r}")
        flat = [j for g in groups for j in g]
        if sorted(flat) != [1, 2, 3, 4]:
            raise UnknownNameError(f"G8 groups must cover 1..4 once each, got {name!r}")
        fg = tuple(frozenset(g) for g in groups)
        return CosetMap(name, lambda x: grouped_parity(x, fg), 8)
    raise UnknownNameError(f"unknown coset map {name!r}")


def format_subset(A) -> str:
    return "{" + ",".join(str(j) for j in sorted(A)) + "}"
