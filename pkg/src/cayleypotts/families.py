"""The configuration families whose unit balls fall in a single energy class,
plus file and random configurations for cross-checking.

Spin values are non-negative integers.  Each constructor returns a Config
carrying the evaluator, the class its balls are claimed to belong to, and the
coset map it factors through (checkable with the verifier).  Family spec
strings double as CLI syntax:

    ti:1                     constant
    parity2:A=1|1,2          two values by subset parity
    phi6:1,2,3|1,2,3,4       four values on complement-paired index-8 cosets
    phi7:A=1,2,3|1,2,3       index-4 cosets, first value doubled on 0 and 1
    psi7:A=1,2,3|1,2,3       index-4 cosets, last value doubled on 2 and 3
    xi7:1,2,3                value from (parent parity, own parity)
    phi8:1,2;3;4|1,2,3,4     pair-parity variant of phi6
    phi9:1,3                 values graded along the {1,2}-projection
    phi10:1,2,3, phi11:1,2,3 values on paired S3 cosets
    phi12:1                  base + coset index of the a1*a2 cyclic group
    distinct:0               base + canonical vertex index (all values distinct)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from . import cosets
from .cosets import (
    C10_ASSIGNMENT,
    C11_ASSIGNMENT,
    CyclicCosetTable,
    grouped_parity,
    parity_pair,
    pair_coset_index,
    projection_index,
    subset_parity,
    triple_coset_index,
    word_image_label,
)
from .errors import (
    DomainError,
    InvalidParamsError,
    InvalidSubsetError,
    UnknownNameError,
)
from .words import (
    Word,
    ball_size,
    ball_vertices,
    canonical_index,
    format_word,
    multiply,
    parse_word,
)


@dataclass(frozen=True)
class Config:
    """A spin configuration: a deterministic evaluator on reduced words."""

    spec: str
    value: Callable
    claimed_class: Optional[int] = None
    coset_map: Optional[str] = None
    max_radius: Optional[int] = None  # None: defined on the whole tree

    def values(self, radius: int) -> list:
        if self.max_radius is not None and radius > self.max_radius:
            raise DomainError(
                f"config {self.spec!r} is only defined up to radius {self.max_radius}")
        return [self.value(w) for w in ball_vertices(radius)]


def _spin(v, what: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InvalidParamsError(f"{what} must be a non-negative integer, got {v!r}")
    return v


def _distinct_spins(vals: Sequence[int], what: str) -> tuple:
    out = tuple(_spin(v, what) for v in vals)
    if len(set(out)) != len(out):
        raise InvalidParamsError(f"{what} must be pairwise distinct, got {out}")
    return out


def _subset(A) -> tuple:
    subset = cosets._check_subset(A)
    return tuple(sorted(subset))


def _fmt_vals(vals) -> str:
    return ",".join(str(v) for v in vals)


# --- the families -------------------------------------------------------------

def translation_invariant(i: int) -> Config:
    i = _spin(i, "value")
    return Config(spec=f"ti:{i}", value=lambda x: i, claimed_class=1)


def parity2(A, l: int, m: int) -> Config:
    subset = _subset(A)
    l, m = _distinct_spins((l, m), "values")
    claimed = {1: 2, 2: 3, 3: 4, 4: 5}[len(subset)]
    vals = (l, m)
    return Config(
        spec=f"parity2:A={_fmt_vals(subset)}|{l},{m}",
        value=lambda x: vals[subset_parity(x, subset)],
        claimed_class=claimed,
        coset_map="H" + cosets.format_subset(subset),
    )


def _paired_eight(groups, vals):
    def value(x):
        v = triple_coset_index(grouped_parity(x, groups))
        return vals[min(v, 7 - v)]
    return value


def phi6(triple=(1, 2, 3), values=(1, 2, 3, 4)) -> Config:
    triple = tuple(triple)
    if len(triple) != 3 or len(set(triple)) != 3:
        raise InvalidSubsetError(f"need three distinct letters, got {triple!r}")
    for j in triple:
        cosets._check_subset((j,))
    vals = _distinct_spins(values, "values")
    groups = tuple(frozenset((j,)) for j in triple)
    name = "G6{" + _fmt_vals(triple) + "}"
    return Config(
        spec=f"phi6:{_fmt_vals(triple)}|{_fmt_vals(vals)}",
        value=_paired_eight(groups, vals),
        claimed_class=6,
        coset_map=name,
    )


def _coset4_config(kind: str, assignment, A) -> Config:
    subset = _subset(A)
    if len(subset) == 4:
        raise InvalidSubsetError("A must leave at least one letter out")
    if isinstance(assignment, Mapping):
        if sorted(assignment) != [0, 1, 2, 3]:
            raise InvalidParamsError(
                f"assignment must cover cosets 0..3, got keys {sorted(assignment)}")
        assignment = tuple(assignment[c] for c in range(4))
    vals = tuple(_spin(v, "assignment value") for v in assignment)
    if len(vals) != 4:
        raise InvalidParamsError(f"need one value per coset 0..3, got {vals!r}")
    if kind == "phi7":
        if not (vals[0] == vals[1] and len({vals[0], vals[2], vals[3]}) == 3):
            raise InvalidParamsError(
                "phi7 doubles its first value on cosets 0 and 1; the remaining "
                f"two must be distinct from it and each other, got {vals!r}")
        shown = (vals[0], vals[2], vals[3])
    else:
        if not (vals[2] == vals[3] and len({vals[0], vals[1], vals[2]}) == 3):
            raise InvalidParamsError(
                "psi7 doubles its last value on cosets 2 and 3; the remaining "
                f"two must be distinct from it and each other, got {vals!r}")
        shown = (vals[0], vals[1], vals[2])
    return Config(
        spec=f"{kind}:A={_fmt_vals(subset)}|{_fmt_vals(shown)}",
        value=lambda x: vals[pair_coset_index(parity_pair(x, subset))],
        claimed_class=7,
        coset_map="G4" + cosets.format_subset(subset),
    )


def phi7(assignment, A=(1, 2, 3)) -> Config:
    """Index-4 coset coloring with the first value doubled on cosets 0, 1."""
    return _coset4_config("phi7", assignment, A)


def psi7(assignment, A=(1, 2, 3)) -> Config:
    """Index-4 coset coloring with the last value doubled on cosets 2, 3."""
    return _coset4_config("psi7", assignment, A)


_XI7_SUBSET = (1, 2, 3)


def xi7(l: int, m: int, n: int, root_value: Optional[int] = None) -> Config:
    """Value from the parity pair (parent, self) over letters {1,2,3}:
    (0,0) and (1,1) share one value, (0,1) and (1,0) get the other two.
    The root has no parent and takes root_value (default the shared value)."""
    l, m, n = _distinct_spins((l, m, n), "values")
    root = l if root_value is None else _spin(root_value, "root value")
    table = {(0, 0): l, (0, 1): m, (1, 0): n, (1, 1): l}

    def value(x):
        if not x:
            return root
        return table[(subset_parity(x[:-1], _XI7_SUBSET),
                      subset_parity(x, _XI7_SUBSET))]

    suffix = "" if root_value is None else f",{root}"
    return Config(
        spec=f"xi7:{l},{m},{n}{suffix}",
        value=value,
        claimed_class=7,
        coset_map="H" + cosets.format_subset(_XI7_SUBSET),
    )


def phi8(pair=(1, 2), k: int = 3, r: int = 4, values=(1, 2, 3, 4)) -> Config:
    pair = tuple(pair)
    flat = sorted(pair + (k, r))
    if len(pair) != 2 or flat != [1, 2, 3, 4]:
        raise InvalidSubsetError(
            f"need a pair plus two singles covering 1..4 once, got {pair},{k},{r}")
    vals = _distinct_spins(values, "values")
    groups = (frozenset(pair), frozenset((k,)), frozenset((r,)))
    body = f"{_fmt_vals(pair)};{k};{r}"
    return Config(
        spec=f"phi8:{body}|{_fmt_vals(vals)}",
        value=_paired_eight(groups, vals),
        claimed_class=8,
        coset_map="G8{" + body + "}",
    )


def phi9(l: int = 1, m: int = 3) -> Config:
    """Values graded along the signed {1,2}-projection index: even multiples
    of l on the positive side, odd multiples of m on the negative side, zero
    on the kernel."""
    l = _spin(l, "l")
    m = _spin(m, "m")
    if l < 1 or m < 1:
        raise InvalidParamsError("phi9 needs l >= 1 and m >= 1")
    if l == m:
        raise InvalidParamsError("phi9 needs l != m")
    if m == 2 * l:
        # the kernel's two off-kernel neighbors take m and 2l; they must differ
        raise InvalidParamsError("phi9 needs m != 2l or the grading collides")

    def value(x):
        n = projection_index(x)
        if n == 0:
            return 0
        if n > 0:
            return 2 * n * l
        return (2 * (-n) - 1) * m

    return Config(spec=f"phi9:{l},{m}", value=value, claimed_class=9,
                  coset_map="F0")


_C10_PAIRING = {0: 0, 5: 0, 1: 1, 4: 1, 2: 2, 3: 2}
_C11_PAIRING = {0: 0, 2: 0, 4: 1, 5: 1, 1: 2, 3: 2}


def phi10(l: int, m: int, n: int) -> Config:
    vals = _distinct_spins((l, m, n), "values")
    return Config(
        spec=f"phi10:{_fmt_vals(vals)}",
        value=lambda x: vals[_C10_PAIRING[word_image_label(x, C10_ASSIGNMENT)]],
        claimed_class=10,
        coset_map="S3C10",
    )


def phi11(l: int, m: int, n: int) -> Config:
    vals = _distinct_spins((l, m, n), "values")
    return Config(
        spec=f"phi11:{_fmt_vals(vals)}",
        value=lambda x: vals[_C11_PAIRING[word_image_label(x, C11_ASSIGNMENT)]],
        claimed_class=11,
        coset_map="S3C11",
    )


def phi12(l: int = 1) -> Config:
    base = _spin(l, "l")
    table = CyclicCosetTable()
    return Config(
        spec=f"phi12:{base}",
        value=lambda x: base + table.index(x),
        claimed_class=12,
        coset_map="U",
    )


def all_distinct(base: int = 0) -> Config:
    base = _spin(base, "base")
    return Config(
        spec=f"distinct:{base}",
        value=lambda x: base + canonical_index(x),
        claimed_class=12,
    )


# --- derived configurations ----------------------------------------------------

def translate(config: Config, g: Word) -> Config:
    """Shift the configuration: the new value at x is the old value at g*x."""
    new_max = None
    if config.max_radius is not None:
        new_max = config.max_radius - len(g)
        if new_max < 0:
            raise DomainError(f"translating by {format_word(g)} empties the domain")
    return Config(
        spec=f"translate:{format_word(g)}|{config.spec}",
        value=lambda x: config.value(multiply(g, x)),
        claimed_class=config.claimed_class,
        max_radius=new_max,
    )


def from_mapping(mapping: Mapping, spec: str, max_radius: int) -> Config:
    table = dict(mapping)

    def value(x):
        try:
            return table[x]
        except KeyError:
            raise DomainError(f"{spec!r} has no value at {format_word(x)}")

    return Config(spec=spec, value=value, max_radius=max_radius)


def random_config(radius: int, seed: int, low: int = 0, high: int = 6) -> Config:
    """Pseudorandom values on the radius ball, reproducible from the seed."""
    rng = random.Random(seed)
    vs = ball_vertices(radius)
    mapping = {w: rng.randint(low, high) for w in vs}
    return from_mapping(mapping, f"random:{seed}", radius)


def with_flips(config: Config, flips: Mapping) -> Config:
    """Override finitely many vertices of a configuration."""
    table = {tuple(w): _spin(v, "flip value") for w, v in flips.items()}
    if not table:
        return config
    shown = ",".join(f"{format_word(w)}={v}" for w, v in
                     sorted(table.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def value(x):
        if x in table:
            return table[x]
        return config.value(x)

    return Config(
        spec=f"flip:{shown}|{config.spec}",
        value=value,
        max_radius=config.max_radius,
    )


# --- family spec strings --------------------------------------------------------

def _parse_ints(text: str, what: str) -> tuple:
    parts = text.split(",") if text else []
    out = []
    for p in parts:
        p = p.strip()
        if not p or not (p.isdigit() or (p[0] == "-" and p[1:].isdigit())):
            raise InvalidParamsError(f"bad {what} {text!r}")
        out.append(int(p))
    return tuple(out)


def _split_subset_and_values(rest: str, kind: str) -> tuple:
    if "|" not in rest:
        raise InvalidParamsError(f"{kind} spec needs '|', got {rest!r}")
    left, right = rest.split("|", 1)
    return left, _parse_ints(right, f"{kind} values")


def parse_family(text: str) -> Config:
    """Build a Config from its spec string."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise UnknownNameError(f"bad family spec {text!r}: expected kind:params")
    if kind == "ti":
        vals = _parse_ints(rest, "ti value")
        if len(vals) != 1:
            raise InvalidParamsError(f"ti needs one value, got {text!r}")
        return translation_invariant(vals[0])
    if kind == "parity2":
        left, vals = _split_subset_and_values(rest, kind)
        if not left.startswith("A="):
            raise InvalidParamsError(f"parity2 spec needs A=..., got {text!r}")
        A = _parse_ints(left[2:], "subset")
        if len(vals) != 2:
            raise InvalidParamsError(f"parity2 needs two values, got {text!r}")
        return parity2(A, *vals)
    if kind == "phi6":
        left, vals = _split_subset_and_values(rest, kind)
        triple = _parse_ints(left, "letters")
        if len(vals) != 4:
            raise InvalidParamsError(f"phi6 needs four values, got {text!r}")
        return phi6(triple, vals)
    if kind in ("phi7", "psi7"):
        left, vals = _split_subset_and_values(rest, kind)
        if not left.startswith("A="):
            raise InvalidParamsError(f"{kind} spec needs A=..., got {text!r}")
        A = _parse_ints(left[2:], "subset")
        if len(vals) != 3:
            raise InvalidParamsError(f"{kind} needs three values, got {text!r}")
        l, m, n = vals
        assignment = (l, l, m, n) if kind == "phi7" else (l, m, n, n)
        return phi7(assignment, A) if kind == "phi7" else psi7(assignment, A)
    if kind == "xi7":
        vals = _parse_ints(rest, "xi7 values")
        if len(vals) == 3:
            return xi7(*vals)
        if len(vals) == 4:
            return xi7(vals[0], vals[1], vals[2], root_value=vals[3])
        raise InvalidParamsError(f"xi7 needs three values and an optional root, got {text!r}")
    if kind == "phi8":
        left, vals = _split_subset_and_values(rest, kind)
        parts = left.split(";")
        if len(parts) != 3:
            raise InvalidParamsError(f"phi8 spec needs pair;k;r, got {text!r}")
        pair = _parse_ints(parts[0], "pair")
        ks = _parse_ints(parts[1], "k")
        rs = _parse_ints(parts[2], "r")
        if len(pair) != 2 or len(ks) != 1 or len(rs) != 1:
            raise InvalidParamsError(f"phi8 spec needs pair;k;r, got {text!r}")
        if len(vals) != 4:
            raise InvalidParamsError(f"phi8 needs four values, got {text!r}")
        return phi8(pair, ks[0], rs[0], vals)
    if kind == "phi9":
        vals = _parse_ints(rest, "phi9 values")
        if len(vals) != 2:
            raise InvalidParamsError(f"phi9 needs two values, got {text!r}")
        return phi9(*vals)
    if kind in ("phi10", "phi11"):
        vals = _parse_ints(rest, f"{kind} values")
        if len(vals) != 3:
            raise InvalidParamsError(f"{kind} needs three values, got {text!r}")
        return phi10(*vals) if kind == "phi10" else phi11(*vals)
    if kind == "phi12":
        vals = _parse_ints(rest, "phi12 value")
        if len(vals) != 1:
            raise InvalidParamsError(f"phi12 needs one value, got {text!r}")
        return phi12(vals[0])
    if kind == "distinct":
        vals = _parse_ints(rest, "distinct base")
        if len(vals) != 1:
            raise InvalidParamsError(f"distinct needs one base value, got {text!r}")
        return all_distinct(vals[0])
    raise UnknownNameError(f"unknown family {kind!r}")


# --- value files ----------------------------------------------------------------

def dump_config(config: Config, radius: int, stream) -> None:
    """word<TAB>value lines in canonical order, with '#' metadata up front."""
    vals = config.values(radius)
    stream.write("# cayleypotts config dump\n")
    stream.write(f"# family: {config.spec}\n")
    stream.write(f"# radius: {radius}\n")
    for w, v in zip(ball_vertices(radius), vals):
        stream.write(f"{format_word(w)}\t{v}\n")


def load_config(stream) -> Config:
    """Inverse of dump_config; the dump must cover a whole ball."""
    meta = {}
    mapping = {}
    for line in stream:
        line = line.rstrip("\n")
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, val = body.partition(":")
                meta[key.strip()] = val.strip()
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise InvalidParamsError(f"bad dump line {line!r}")
        w = parse_word(parts[0])
        if not parts[1].lstrip("-").isdigit():
            raise InvalidParamsError(f"bad value in dump line {line!r}")
        mapping[w] = _spin(int(parts[1]), "value")
    if not mapping:
        raise InvalidParamsError("empty config dump")
    radius = max(len(w) for w in mapping)
    if "radius" in meta:
        declared = int(meta["radius"])
        if declared != radius:
            raise InvalidParamsError(
                f"dump declares radius {declared} but contains words up to {radius}")
    if len(mapping) != ball_size(radius):
        raise InvalidParamsError(
            f"dump holds {len(mapping)} words, expected the full radius-{radius} "
            f"ball of {ball_size(radius)}")
    spec = meta.get("family", f"file:radius{radius}")
    return from_mapping(mapping, spec, radius)
