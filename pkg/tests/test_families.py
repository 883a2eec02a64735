import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleypotts.errors import (
    DomainError,
    InvalidParamsError,
    InvalidSubsetError,
    UnknownNameError,
)
from cayleypotts.families import (
    all_distinct,
    dump_config,
    from_mapping,
    load_config,
    parity2,
    parse_family,
    phi6,
    phi7,
    phi8,
    phi9,
    phi10,
    phi11,
    phi12,
    psi7,
    random_config,
    translate,
    translation_invariant,
    with_flips,
    xi7,
)
from cayleypotts.words import ball_size, ball_vertices, canonical_index, parse_word

ALL_SPECS = [
    "ti:1",
    "parity2:A=1|1,2",
    "parity2:A=1,2|1,2",
    "parity2:A=1,2,3|1,2",
    "parity2:A=1,2,3,4|1,2",
    "phi6:1,2,3|1,2,3,4",
    "phi7:A=1,2,3|1,2,3",
    "psi7:A=1,2,3|1,2,3",
    "xi7:1,2,3",
    "phi8:1,2;3;4|1,2,3,4",
    "phi9:1,3",
    "phi10:1,2,3",
    "phi11:1,2,3",
    "phi12:1",
    "distinct:0",
]


def _vals(cfg, texts):
    return [cfg.value(parse_word(t)) for t in texts]


def test_translation_invariant():
    cfg = translation_invariant(5)
    assert _vals(cfg, ["e", "1", "1212"]) == [5, 5, 5]
    assert cfg.claimed_class == 1


def test_parity2_values():
    cfg = parity2((1,), 1, 2)
    assert _vals(cfg, ["e", "1", "2", "12", "121"]) == [1, 2, 1, 2, 1]
    assert cfg.claimed_class == 2
    assert cfg.coset_map == "H{1}"
    assert parity2((1, 2), 1, 2).claimed_class == 3
    assert parity2((1, 2, 3), 1, 2).claimed_class == 4
    assert parity2((1, 2, 3, 4), 1, 2).claimed_class == 5


def test_phi6_values():
    cfg = phi6()
    assert cfg.value(()) == 1
    assert cfg.value((3,)) == 2
    assert cfg.claimed_class == 6
    assert cfg.coset_map == "G6{1,2,3}"
    # complement pairing: cosets v and 7-v share a value
    from cayleypotts.cosets import named_coset_map, triple_coset_index
    g6 = named_coset_map("G6{1,2,3}")
    for x in ball_vertices(4):
        v = triple_coset_index(g6(x))
        y_val = cfg.value(x)
        assert y_val == (1, 2, 3, 4)[min(v, 7 - v)]


def test_phi7_values():
    cfg = phi7((1, 1, 2, 3))
    assert cfg.value(()) == 1
    assert cfg.claimed_class == 7
    assert cfg.coset_map == "G4{1,2,3}"
    # same value on the kernel and its length-parity partner
    assert cfg.value((4,)) == cfg.value(())
    with pytest.raises(InvalidParamsError):
        phi7((1, 2, 2, 3))  # first two must agree
    q = psi7((1, 2, 3, 3))
    assert q.value(()) == 1
    assert q.value((4,)) == 2
    assert q.value((1,)) == q.value((2,)) == 3
    with pytest.raises(InvalidParamsError):
        psi7((1, 1, 2, 3))  # last two must agree


def test_xi7_values():
    cfg = xi7(1, 2, 3)
    assert cfg.value(()) == 1  # root default
    assert _vals(cfg, ["4", "1", "14", "12"]) == [1, 2, 1, 3]
    assert xi7(1, 2, 3, root_value=9).value(()) == 9
    with pytest.raises(InvalidParamsError):
        xi7(1, 1, 3)


def test_phi8_cover_validation():
    cfg = phi8()
    assert cfg.coset_map == "G8{1,2;3;4}"
    with pytest.raises(InvalidSubsetError):
        phi8(pair=(1, 2), k=2, r=4)


def test_phi9_values():
    cfg = phi9()
    assert cfg.spec == "phi9:1,3"
    assert _vals(cfg, ["1", "2", "12", "3", "21"]) == [2, 3, 4, 0, 9]
    with pytest.raises(InvalidParamsError):
        phi9(1, 2)  # m = 2l collides
    with pytest.raises(InvalidParamsError):
        phi9(1, 1)
    with pytest.raises(InvalidParamsError):
        phi9(0, 3)


def test_phi10_phi11_values():
    cfg = phi10(1, 2, 3)
    assert _vals(cfg, ["e", "1", "3", "13", "31"]) == [1, 2, 3, 3, 2]
    cfg = phi11(1, 2, 3)
    assert _vals(cfg, ["e", "1", "3", "13", "31"]) == [1, 2, 3, 3, 2]


def test_phi12_values():
    cfg = phi12(1)
    assert _vals(cfg, ["e", "1", "2", "3", "4"]) == [1, 2, 2, 3, 4]
    assert cfg.claimed_class == 12
    assert cfg.coset_map == "U"


def test_all_distinct():
    cfg = all_distinct(0)
    vs = ball_vertices(3)
    seen = [cfg.value(x) for x in vs]
    assert seen == [canonical_index(x) for x in vs]
    assert len(set(seen)) == len(seen)
    assert all_distinct(10).value(()) == 10


def test_parse_family_round_trip():
    for spec in ALL_SPECS:
        cfg = parse_family(spec)
        assert cfg.spec == spec
        again = parse_family(cfg.spec)
        for x in ball_vertices(3):
            assert cfg.value(x) == again.value(x)


def test_parse_family_rejects_garbage():
    for bad in ["", "ti", "ti:", "ti:x", "wat:1", "parity2:1,2",
                "phi9:1,2", "phi6:1,2|1,2,3,4", "phi8:1,2;3|1,2,3,4",
                "xi7:1,1,3", "distinct:-1", "phi12:"]:
        with pytest.raises((InvalidParamsError, UnknownNameError,
                            InvalidSubsetError)):
            parse_family(bad)


def test_translate():
    cfg = parity2((1,), 1, 2)
    t = translate(cfg, (1,))
    assert t.value(()) == cfg.value((1,))
    assert t.value((1,)) == cfg.value(())
    assert t.value((2,)) == cfg.value((1, 2))


def test_translate_bounded_domain():
    base = random_config(3, 11)
    t = translate(base, (1,))
    assert t.max_radius == 2
    assert t.value(()) == base.value((1,))
    with pytest.raises(DomainError):
        t.values(3)


def test_random_config_determinism():
    a = random_config(4, 42)
    b = random_config(4, 42)
    c = random_config(4, 43)
    va = a.values(4)
    assert va == b.values(4)
    assert va != c.values(4)
    assert all(0 <= v <= 6 for v in va)
    assert len(va) == ball_size(4)


def test_with_flips():
    base = translation_invariant(1)
    flipped = with_flips(base, {parse_word("12"): 9})
    assert flipped.value((1, 2)) == 9
    assert flipped.value(()) == 1
    assert flipped.value((1, 2, 1)) == 1
    with pytest.raises(InvalidParamsError):
        with_flips(base, {(): -3})


def test_dump_load_round_trip():
    cfg = parse_family("phi9:1,3")
    buf = io.StringIO()
    dump_config(cfg, 4, buf)
    buf.seek(0)
    loaded = load_config(buf)
    assert loaded.spec == cfg.spec
    assert loaded.max_radius == 4
    for x in ball_vertices(4):
        assert loaded.value(x) == cfg.value(x)
    with pytest.raises(DomainError):
        loaded.values(5)


def test_load_rejects_incomplete_dump():
    cfg = translation_invariant(1)
    buf = io.StringIO()
    dump_config(cfg, 3, buf)
    lines = buf.getvalue().splitlines()
    broken = "\n".join(lines[:-1]) + "\n"
    with pytest.raises(InvalidParamsError):
        load_config(io.StringIO(broken))


def test_load_rejects_malformed_line():
    with pytest.raises(InvalidParamsError):
        load_config(io.StringIO("e\t1\textra\n"))
    with pytest.raises(InvalidParamsError):
        load_config(io.StringIO("e\tnope\n"))
    with pytest.raises(InvalidParamsError):
        load_config(io.StringIO(""))


def test_from_mapping():
    mapping = {x: 7 for x in ball_vertices(2)}
    cfg = from_mapping(mapping, "custom", 2)
    assert cfg.value(()) == 7
    with pytest.raises(DomainError):
        cfg.value((1, 2, 1))


@given(st.sampled_from(ALL_SPECS))
def test_family_values_are_nonnegative_ints(spec):
    cfg = parse_family(spec)
    for x in ball_vertices(3):
        v = cfg.value(x)
        assert isinstance(v, int)
        assert v >= 0
