import json

import pytest

from msv_complexity.complexity import analyze
from msv_complexity.constructions import max_complexity
from msv_complexity.perm_core import parse_permutation
from msv_complexity.survey import (
    CacheError,
    SplitMix64,
    SurveyLimitError,
    TheoremId,
    VerificationOutcome,
    cache_file,
    enumerate_reports,
    load_cache,
    random_permutation,
    sample_reports,
    save_cache,
    spectrum,
    verify,
)

# histograms and lexicographically-first witnesses, frozen from the
# brute-force oracle in tests/oracles.py
FROZEN = {
    4: ({0: 22, 2: 1, 3: 1}, {0: "1234", 2: "3412", 3: "4312"}),
    5: (
        {0: 90, 2: 9, 3: 11, 4: 3, 5: 2, 6: 2, 7: 2, 8: 1},
        {0: "12345", 2: "14523", 3: "15423", 4: "45123", 5: "34512", 6: "35412", 7: "45312", 8: "54312"},
    ),
    6: (
        {0: 394, 2: 61, 3: 83, 4: 35, 5: 27, 6: 27, 7: 28, 8: 21, 9: 12, 10: 9,
         11: 7, 12: 7, 13: 5, 14: 3, 15: 1},
        {0: "123456", 2: "125634", 3: "126534", 4: "156234", 5: "145623", 6: "146523",
         7: "156423", 8: "165423", 9: "345612", 10: "346512", 11: "356412", 12: "365412",
         13: "465312", 14: "564312", 15: "654312"},
    ),
}


def test_enumerate_reports():
    reports = list(enumerate_reports(3))
    assert len(reports) == 6 and all(r.complexity == 0 for r in reports)
    assert [r.w.one_line() for r in reports] == ["123", "132", "213", "231", "312", "321"]
    assert [r.complexity for r in enumerate_reports(1)] == [0]
    reports = list(enumerate_reports(4))
    assert len(reports) == 24 and max(r.complexity for r in reports) == 3


def test_enumerate_limit():
    with pytest.raises(SurveyLimitError):
        next(enumerate_reports(12))
    with pytest.raises(SurveyLimitError):
        spectrum(7, max_n=6)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_spectrum_frozen(n):
    counts, wits = FROZEN[n]
    res = spectrum(n)
    assert res.counts == counts
    assert {d: w.one_line() for d, w in res.witnesses.items()} == wits
    assert res.total_enumerated == sum(counts.values())


def test_spectrum_small():
    assert spectrum(4).achieved == (0, 2, 3)
    assert spectrum(5).achieved == (0, 2, 3, 4, 5, 6, 7, 8)
    assert spectrum(3).achieved == (0,)
    assert len(spectrum(3).maximizers) == 6


def test_witnesses_reanalyze():
    res = spectrum(6)
    for d, w in res.witnesses.items():
        assert analyze(w).complexity == d
    assert res.max_complexity == max(res.achieved)


def test_matches_enumerate_reports():
    res = spectrum(5)
    seen = {}
    for r in enumerate_reports(5):
        seen.setdefault(r.complexity, r.w)
    assert seen == res.witnesses


def test_verify_examples():
    out = verify("max_value", 5)
    assert out.passed and "d_max=8" in out.observed
    out = verify(TheoremId.UNIQUE_MAXIMIZER, 6)
    assert out.passed and "654312" in out.observed
    assert verify("no_complexity_one", 4).passed
    assert verify("no_complexity_one", 2).passed
    with pytest.raises(ValueError):
        verify("max_value", 3)
    with pytest.raises(ValueError):
        verify("bogus", 5)


def test_verify_detects_bad_result():
    res = spectrum(5)
    tampered = type(res)(
        n=5, achieved=res.achieved + (9,), witnesses={**res.witnesses, 9: res.witnesses[8]},
        max_complexity=9, maximizers=res.maximizers, total_enumerated=res.total_enumerated,
    )
    out = verify("max_value", 5, result=tampered)
    assert not out.passed and out.detail
    out = verify("full_spectrum", 5, result=tampered)
    assert not out.passed and "unexpected" in out.detail


def test_failed_outcome_needs_detail():
    with pytest.raises(ValueError):
        VerificationOutcome(TheoremId.MAX_VALUE, 4, False)


def test_parallel_matches_serial():
    serial = spectrum(6, workers=1)
    parallel = spectrum(6, workers=2)
    assert serial == parallel
    assert serial.to_json() == parallel.to_json()


def test_splitmix_reference_values():
    # published SplitMix64 outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_random_permutation_uniformish():
    rng = SplitMix64(5)
    counts = {}
    for _ in range(6000):
        w = random_permutation(3, rng).word
        counts[w] = counts.get(w, 0) + 1
    assert len(counts) == 6
    assert all(800 < c < 1200 for c in counts.values())


def test_sample_reports_deterministic():
    a = [r.w for r in sample_reports(20, 100, 42)]
    b = [r.w for r in sample_reports(20, 100, 42)]
    c = [r.w for r in sample_reports(20, 100, 43)]
    assert a == b and a != c
    with pytest.raises(ValueError):
        list(sample_reports(5, 0, 1))


def test_sample_bound_n12():
    top = max(r.complexity for r in sample_reports(12, 1000, 7))
    assert top <= max_complexity(12) == 99


def test_cache_roundtrip(tmp_path):
    res = spectrum(5)
    path = save_cache(res, tmp_path)
    assert path == cache_file(5, tmp_path)
    data = json.loads(path.read_text())
    assert data["schema"] == 1 and data["n"] == 5 and data["witnesses"]["8"] == "54312"
    assert load_cache(5, tmp_path) == res


def test_cache_tampered_witness(tmp_path):
    path = save_cache(spectrum(5), tmp_path)
    data = json.loads(path.read_text())
    data["witnesses"]["8"] = "34512"
    path.write_text(json.dumps(data))
    with pytest.raises(CacheError, match="analyzes to 5"):
        load_cache(5, tmp_path)


def test_cache_missing_and_schema(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_cache(7, tmp_path)
    path = save_cache(spectrum(4), tmp_path)
    data = json.loads(path.read_text())
    data["schema"] = 99
    path.write_text(json.dumps(data))
    with pytest.raises(CacheError, match="schema"):
        load_cache(4, tmp_path)
    path.write_text("{not json")
    with pytest.raises(CacheError):
        load_cache(4, tmp_path)


def test_no_maximizer_tampering(tmp_path):
    path = save_cache(spectrum(4), tmp_path)
    data = json.loads(path.read_text())
    data["maximizers"] = [parse_permutation("3412").one_line()]
    path.write_text(json.dumps(data))
    with pytest.raises(CacheError, match="maximizer"):
        load_cache(4, tmp_path)
