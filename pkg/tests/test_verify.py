import pytest

from cayleypotts import kernels
from cayleypotts.energy import class_energy, coupling
from cayleypotts.errors import InvalidParamsError, OracleMismatchError
from cayleypotts.families import parse_family, random_config, translate
from cayleypotts.verify import (
    CROSS_CHECK_COUPLINGS,
    REPORT_FAMILIES,
    census,
    check_periodic,
    check_weakly_periodic,
    is_ground_state,
    theorem1_report,
    theorem2_report,
)
from cayleypotts.words import ball_size, ball_vertices, parse_word

RADIUS6_COUNTS = {
    "ti:1": {1: 485},
    "parity2:A=1|1,2": {2: 485},
    "parity2:A=1,2|1,2": {3: 485},
    "parity2:A=1,2,3|1,2": {4: 485},
    "parity2:A=1,2,3,4|1,2": {5: 485},
    "phi6:1,2,3|1,2,3,4": {6: 485},
    "phi7:A=1,2,3|1,2,3": {4: 242, 7: 243},
    "psi7:A=1,2,3|1,2,3": {4: 243, 7: 242},
    "xi7:1,2,3": {4: 2, 7: 360, 11: 123},
    "phi8:1,2;3;4|1,2,3,4": {8: 485},
    "phi9:1,3": {9: 485},
    "phi10:1,2,3": {11: 485},
    "phi11:1,2,3": {11: 485},
    "phi12:1": {8: 11, 12: 474},
}


def test_census_radius_precondition():
    cfg = parse_family("ti:1")
    with pytest.raises(InvalidParamsError):
        census(cfg, 1)
    with pytest.raises(InvalidParamsError):
        census(cfg, 0)


def test_census_counts_sum():
    for spec in ["ti:1", "phi12:1", "xi7:1,2,3"]:
        cfg = parse_family(spec)
        for radius in (2, 3, 4, 5):
            cens = census(cfg, radius)
            assert sum(cens.counts.values()) == ball_size(radius - 1)


def test_radius6_censuses_frozen():
    for spec, expected in RADIUS6_COUNTS.items():
        cens = census(parse_family(spec), 6)
        assert cens.counts == expected, spec
        assert cens.uniform == (len(expected) == 1)


def test_phi12_exception_vertices():
    cens = census(parse_family("phi12:1"), 6)
    assert cens.modal_class == 12
    got = [w for w, c in cens.exceptions]
    alternating = [w for w in ball_vertices(5)
                   if all(t in (1, 2) for t in w)]
    assert got == alternating
    assert len(got) == 11
    assert all(c == 8 for _, c in cens.exceptions)


def test_cross_check_all_families_radius5():
    for spec in RADIUS6_COUNTS:
        census(parse_family(spec), 5, cross_check=True)


def test_cross_check_couplings_separate_all_classes():
    for a in range(1, 13):
        for b in range(a + 1, 13):
            assert any(class_energy(a, j) != class_energy(b, j)
                       for j in CROSS_CHECK_COUPLINGS), (a, b)


def test_cross_check_detects_bad_kernel(monkeypatch):
    cfg = parse_family("ti:1")
    real = kernels.census_classes

    def lying(values, n_centers, start=0, stop=None, backend=None):
        out = real(values, n_centers, start, stop)
        out[0] = 12 if out[0] != 12 else 1
        return out

    monkeypatch.setattr("cayleypotts.verify.kernels.census_classes", lying)
    with pytest.raises(OracleMismatchError):
        census(cfg, 3, cross_check=True)


def test_census_threads_equivalent():
    cfg = parse_family("xi7:1,2,3")
    a = census(cfg, 6, threads=1)
    b = census(cfg, 6, threads=3)
    c = census(cfg, 6, threads=7)
    assert a == b == c
    with pytest.raises(InvalidParamsError):
        census(cfg, 4, threads=0)


def test_rerooting_preserves_uniformity():
    for spec in ["parity2:A=1|1,2", "phi6:1,2,3|1,2,3,4", "phi9:1,3"]:
        cfg = parse_family(spec)
        base = census(cfg, 5)
        for g in ball_vertices(2):
            moved = census(translate(cfg, g), 5)
            assert moved.counts == base.counts, (spec, g)
            assert moved.uniform == base.uniform


def test_check_periodic():
    rep = check_periodic(parse_family("parity2:A=1|1,2"), "H{1}", 5)
    assert rep.holds and not rep.witnesses
    rep = check_periodic(parse_family("ti:1"), "G6{1,2,3}", 4)
    assert rep.holds
    rep = check_periodic(parse_family("phi12:1"), "U", 5)
    assert rep.holds
    rep = check_periodic(parse_family("phi7:A=1,2,3|1,2,3"), "G4{1,2,3}", 5)
    assert rep.holds
    rep = check_periodic(parse_family("phi10:1,2,3"), "S3C10", 5)
    assert rep.holds
    rep = check_periodic(parse_family("phi11:1,2,3"), "S3C11", 5)
    assert rep.holds
    rep = check_periodic(parse_family("phi9:1,3"), "F0", 5)
    assert rep.holds


def test_xi7_weakly_but_not_periodic():
    cfg = parse_family("xi7:1,2,3")
    strong = check_periodic(cfg, "H{1,2,3}", 5)
    assert not strong.holds
    assert strong.witnesses
    weak = check_weakly_periodic(cfg, "H{1,2,3}", 5)
    assert weak.holds


def test_weak_check_needs_index_two():
    cfg = parse_family("ti:1")
    with pytest.raises(InvalidParamsError):
        check_weakly_periodic(cfg, "G6{1,2,3}", 4)
    with pytest.raises(InvalidParamsError):
        check_weakly_periodic(cfg, "U", 4)


def test_periodic_config_is_weakly_periodic():
    rep = check_weakly_periodic(parse_family("parity2:A=1|1,2"), "H{1}", 5)
    assert rep.holds


def test_ground_state_monotone_false():
    cfg = parse_family("ti:1")
    j = coupling(1, 1)
    for radius in (3, 4, 5, 6):
        verdict = is_ground_state(cfg, j, radius)
        assert not verdict.holds
        assert verdict.violation_count == ball_size(radius - 1)
        assert verdict.gaps == (8,)


def test_ground_state_verdict_fields():
    verdict = is_ground_state(parse_family("phi9:1,3"), coupling(-3, 1), 5)
    assert verdict.holds
    assert verdict.argmin == (9,)
    assert verdict.violation_count == 0
    assert verdict.violations == ()
    payload = verdict.to_jsonable()
    assert payload["j"] == ["-3", "1"]
    assert payload["holds"] is True


def test_theorem1_report_shape_and_verdicts():
    rep = theorem1_report(radius=6)
    assert rep == theorem1_report(radius=6)
    assert len(rep["rows"]) == 14
    cases = [r["case"] for r in rep["rows"]]
    assert cases == list(REPORT_FAMILIES)
    verdict = {r["case"]: r["matches_claim"] for r in rep["rows"]}
    mismatches = {c for c, ok in verdict.items() if not ok}
    assert mismatches == {"C7-phi", "C7-psi", "C7-xi", "C10", "C12"}
    assert not rep["all_match"]
    for row in rep["rows"]:
        if row["case"] in {"C7-phi", "C7-psi", "C7-xi", "C12"}:
            assert row["witnesses"], row["case"]
    c12 = next(r for r in rep["rows"] if r["case"] == "C12")
    assert c12["counts"] == {"8": 11, "12": 474}
    with pytest.raises(InvalidParamsError):
        theorem1_report(radius=2)


def test_theorem2_report_shape_and_verdicts():
    rep = theorem2_report(radius=6, seed=7)
    assert rep == theorem2_report(radius=6, seed=7)
    assert len(rep["cases"]) == 13
    a = rep["cases"][0]
    assert a["case"] == "A" and a["all_pass"]
    surprises = set()
    for case in rep["cases"][1:]:
        assert case["in_set"], case["case"]
        for chk in case["checks"]:
            if not chk["as_expected"]:
                surprises.add((case["case"], chk["family"]))
    assert surprises == {
        ("B.6", "phi12:1"),
        ("C.5", "phi12:1"),
        ("C.6", "xi7:1,2,3"),
        ("C.6", "psi7:A=1,2,3|1,2,3"),
    }
    assert not rep["all_as_expected"]


def test_zero_coupling_everything_grounds():
    j = coupling(0, 0)
    for seed in range(5):
        cfg = random_config(4, seed)
        assert is_ground_state(cfg, j, 4).holds
