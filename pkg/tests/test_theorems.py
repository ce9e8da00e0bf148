import pytest

from fuzzygamma import theorems
from fuzzygamma.fuzzy import GridBattery
from fuzzygamma.theorems import (NEGATIVE_CONTROL_IDS, THEOREM_IDS, check,
                                 check_all, cross_validate_random,
                                 find_counterexample, replay_witness)

EXPECTED_IDS = {
    "P4", "P5", "P6", "L8", "L9", "L10", "L11", "L12", "L15", "L17",
    "C18", "C19", "L20", "L21", "L22", "T13", "T16", "T23", "T24", "T26",
    "T28", "P29", "C30", "C31", "QI",
}


def test_registry_completeness():
    # closed id set, no duplicates, descriptions for everything
    assert set(THEOREM_IDS) == EXPECTED_IDS
    assert len(THEOREM_IDS) == len(EXPECTED_IDS)
    for tid in THEOREM_IDS + NEGATIVE_CONTROL_IDS:
        assert tid in theorems.DESCRIPTIONS
        assert tid in theorems._CHECKS


def test_unknown_id_rejected(T1):
    with pytest.raises(KeyError):
        check(T1, "T99")


def test_check_requires_associative():
    from fuzzygamma import validate_structure
    S = validate_structure(["a", "b"], ["g"], [[[1, 1]], [[0, 0]]], [])
    with pytest.raises(ValueError, match="associative"):
        check(S, "L10")


def test_l10_on_lz2(LZ2):
    v = check(LZ2, "L10", GridBattery(levels=6))
    assert v.outcome == "holds" and not v.vacuous


def test_t13_on_nz2(NZ2):
    v = check(NZ2, "T13", GridBattery(levels=6))
    assert v.outcome == "holds"


def test_t23_on_t1(T1):
    v = check(T1, "T23", GridBattery(levels=4))
    assert v.outcome == "holds" and not v.vacuous


def test_check_all_counts(T1, LZ2, NZ2):
    for S in (T1, LZ2, NZ2):
        verdicts = check_all(S)
        assert len(verdicts) == 25
        assert [v.theorem for v in verdicts] == list(THEOREM_IDS)
        assert all(v.outcome == "holds" for v in verdicts)


def test_vacuous_reporting_on_nz2(NZ2):
    verdicts = {v.theorem: v for v in check_all(NZ2)}
    # conditional statements hold vacuously on a non-regular structure
    assert verdicts["L8"].vacuous
    assert verdicts["L9"].vacuous
    assert verdicts["C31"].vacuous
    # z is intra-regular (the constant law squares to z), so the
    # element-conditional statement is exercised, not vacuous
    assert not verdicts["L22"].vacuous
    assert not verdicts["L10"].vacuous


def test_negative_control_refuted_on_nz2(NZ2):
    v = check(NZ2, "L8-unconditional", GridBattery(levels=6))
    assert v.outcome == "refuted"
    assert v.witness is not None
    assert replay_witness(NZ2, v)


def test_negative_control_excluded_from_check_all(NZ2):
    assert "L8-unconditional" not in [v.theorem for v in check_all(NZ2)]


def test_witness_replay_requires_refutation(T1):
    v = check(T1, "L10")
    with pytest.raises(ValueError):
        replay_witness(T1, v)


def test_find_counterexample_l10_none():
    assert find_counterexample("L10", n_max=2, m_max=2, levels=6) is None


def test_find_counterexample_weakened_l8():
    hit = find_counterexample("L8-unconditional", n_max=2, m_max=1, levels=6)
    assert hit is not None
    S, verdict = hit
    assert verdict.outcome == "refuted"
    assert replay_witness(S, verdict)


def test_find_counterexample_deterministic():
    a = find_counterexample("L8-unconditional", n_max=2, m_max=1, levels=6)
    b = find_counterexample("L8-unconditional", n_max=2, m_max=1, levels=6)
    assert a[0].digest() == b[0].digest()
    assert a[1].witness == b[1].witness


def test_battery_description_recorded(NZ2):
    v = check(NZ2, "L10", GridBattery(levels=6))
    assert "L=6" in v.battery


def test_cross_validate_random_fixtures(T1, LZ2, NZ2):
    for S in (T1, LZ2, NZ2):
        assert cross_validate_random(S, samples=5_000, seed=3) == []


def test_verdict_serialization(NZ2):
    v = check(NZ2, "T13")
    d = v.to_dict()
    assert d["theorem"] == "T13"
    assert d["outcome"] in ("holds", "refuted")
    assert isinstance(d["battery"], str)
