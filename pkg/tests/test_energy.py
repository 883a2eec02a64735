import io
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleypotts.energy import (
    Ball,
    CLASS_BY_SIGNATURE,
    NUM_CLASSES,
    SIGNATURE_BY_CLASS,
    ball_at,
    ball_energy,
    class_coefficients,
    class_energy,
    class_of,
    coupling,
    difference_set,
    finite_volume_energy,
    format_rational,
    parse_coupling,
    parse_rational,
    relative_energy,
    relative_energy_by_balls,
    signature,
)
from cayleypotts.errors import (
    BoundaryViolationError,
    InfeasibleSignatureError,
    InvalidParamsError,
)
from cayleypotts.families import random_config, translation_invariant, with_flips

rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=7)
couplings = st.tuples(rationals, rationals).map(lambda t: coupling(*t))
balls = st.tuples(
    st.integers(min_value=0, max_value=4),
    st.tuples(*[st.integers(min_value=0, max_value=4)] * 4),
).map(lambda t: Ball(t[0], t[1]))


def test_twelve_distinct_signatures():
    assert len(SIGNATURE_BY_CLASS) == NUM_CLASSES == 12
    assert len(set(SIGNATURE_BY_CLASS.values())) == 12
    assert CLASS_BY_SIGNATURE[SIGNATURE_BY_CLASS[1]] == 1
    assert SIGNATURE_BY_CLASS[1] == (4, 6)
    assert SIGNATURE_BY_CLASS[5] == (0, 6)
    assert SIGNATURE_BY_CLASS[12] == (0, 0)


def test_signature_examples():
    assert signature(Ball(5, (5, 5, 5, 5))) == (4, 6)
    assert class_of(signature(Ball(5, (5, 5, 5, 5)))) == 1
    assert class_of(signature(Ball(0, (1, 2, 3, 4)))) == 12
    assert class_of(signature(Ball(1, (1, 1, 2, 2)))) == 3


def test_infeasible_signature_rejected():
    with pytest.raises(InfeasibleSignatureError):
        class_of((3, 6))


def test_class_energy_example():
    assert class_energy(1, coupling(1, 1)) == 8
    assert ball_energy(Ball(5, (5, 5, 5, 5)), coupling(1, 1)) == 8
    assert class_energy(12, coupling(7, -3)) == 0


def test_class_coefficients_table():
    for cls, (nc, np_) in SIGNATURE_BY_CLASS.items():
        a, b = class_coefficients(cls)
        assert a == Fraction(nc, 2)
        assert b == Fraction(np_)


@given(balls, couplings)
def test_ball_energy_equals_class_form(ball, j):
    assert ball_energy(ball, j) == class_energy(class_of(signature(ball)), j)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == Fraction(-2)
    assert parse_rational("+5") == Fraction(5)
    for bad in ["0.5", "1/0", "1/-2", "", "1/01", "a", "1e3", "--2"]:
        with pytest.raises(InvalidParamsError):
            parse_rational(bad)


def test_parse_coupling():
    j = parse_coupling("-5,1")
    assert j == coupling(-5, 1)
    j = parse_coupling("0/1,0/1")
    assert j == coupling(0, 0)
    with pytest.raises(InvalidParamsError):
        parse_coupling("1")
    with pytest.raises(InvalidParamsError):
        parse_coupling("1,2,3")
    with pytest.raises(InvalidParamsError):
        parse_coupling("0.5,1")


def test_format_rational():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-2)) == "-2"
    assert format_rational(Fraction(0)) == "0"


def test_finite_volume_constant():
    cfg = translation_invariant(1)
    assert finite_volume_energy(cfg.value, 1, coupling(1, 0)) == 4
    assert finite_volume_energy(cfg.value, 1, coupling(0, 1)) == 6


def test_root_flip_relative_energy():
    base = translation_invariant(1)
    flipped = with_flips(base, {(): 2})
    j = coupling(1, 1)
    assert relative_energy(flipped.value, base.value, j, 5) == -16
    assert relative_energy_by_balls(flipped.value, base.value, j, 5) == -16


def test_difference_set():
    base = translation_invariant(1)
    flipped = with_flips(base, {(): 2, (1, 2): 0})
    assert difference_set(flipped.value, base.value, 5) == [(), (1, 2)]


def test_difference_too_close_to_boundary():
    base = translation_invariant(1)
    deep = with_flips(base, {(1, 2, 1, 2): 9})
    with pytest.raises(BoundaryViolationError):
        difference_set(deep.value, base.value, 5)
    with pytest.raises(BoundaryViolationError):
        relative_energy(deep.value, base.value, coupling(1, 1), 5)


@given(st.integers(min_value=0, max_value=400), couplings)
def test_relative_routes_agree(seed, j):
    base = random_config(4, seed)
    flip_rng_vals = [((), seed % 7), ((1,), (seed // 7) % 7),
                     ((2, 1), (seed // 49) % 7)]
    flipped = with_flips(base, dict(flip_rng_vals[: 1 + seed % 3]))
    lhs = relative_energy(flipped.value, base.value, j, 4)
    rhs = relative_energy_by_balls(flipped.value, base.value, j, 4)
    assert lhs == rhs


def test_ball_at():
    cfg = translation_invariant(3)
    ball = ball_at(cfg.value, (1, 2))
    assert ball.center == 3
    assert ball.leaves == (3, 3, 3, 3)
