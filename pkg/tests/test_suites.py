import pytest

from aritygap import FiniteFunction, UnknownSuiteError, run_suite
from aritygap.suites import SUITE_NAMES


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("lemma9_9", 3, 3)
    with pytest.raises(UnknownSuiteError):
        run_suite("lemma2_2", 3, 3, mode="fuzz")


def test_suite_names_registered():
    for name in (
        "lemma2_1", "lemma2_2", "lemma2_3", "lemma2_4", "lemma2_5",
        "remark2_1", "remark2_2", "thm2_1", "thm2_2", "thm2_3", "thm2_4",
        "thm2_5", "thm2_6", "thm3_1", "lemma3_1", "thm3_2", "cor3_1",
        "thm4_1", "cor4_1", "cor4_2", "willard", "cor2_1",
    ):
        assert name in SUITE_NAMES


def test_lemma2_2_dichotomy_small():
    report = run_suite("lemma2_2", 3, 3)
    assert report.passed
    assert report.instances_checked == 150


def test_remarks_and_lemma_2_5():
    for name in ("remark2_1", "remark2_2", "lemma2_5"):
        report = run_suite(name, 3, 3)
        assert report.passed, name


def test_thm2_2_classification():
    report = run_suite("thm2_2", 3, 3)
    assert report.passed
    assert report.instances_checked == 6


def test_thm2_3_classification():
    report = run_suite("thm2_3", 3, 3)
    assert report.passed
    assert report.instances_checked == 144
    with pytest.raises(UnknownSuiteError):
        run_suite("thm2_3", 3, 4)


def test_thm2_6_linear():
    for k in (2, 3, 4, 5):
        report = run_suite("thm2_6", k, 3)
        assert report.passed, k
        if k % 2 == 0:
            assert report.subcases["even"]["instances"] > 0


def test_thm2_1_form():
    report = run_suite("thm2_1", 3, 3, seed=5)
    assert report.passed
    assert report.instances_checked >= 2184


def test_cor2_1_counts():
    report = run_suite("cor2_1", 3, 3)
    assert report.passed
    assert report.instances_checked == 6
    assert report.parameters["census_bucket"] == 6
    report = run_suite("cor2_1", 4, 3)
    assert report.passed
    assert report.instances_checked == 1020
    # the printed closed form disagrees with its own derivation; noted
    assert report.parameters["printed_formula"] != report.parameters["derivation_count"]
    assert report.notes


def test_willard_suite():
    report = run_suite("willard", 2, 3, seed=11, sample=1500)
    assert report.passed
    assert report.instances_checked > 0


def test_lemma2_3_exhaustive_binary():
    report = run_suite("lemma2_3", 2, 4)
    assert report.passed
    assert report.mode.startswith("exhaustive")


def test_lemma2_4_vacuous_at_ternary():
    report = run_suite("lemma2_4", 3, 3)
    assert report.vacuous and report.passed


def test_lemma2_4_extended_at_3_4():
    report = run_suite("lemma2_4", 3, 4)
    assert report.passed
    assert report.instances_checked == 78


def test_lemma2_4_sampled_at_4_4():
    report = run_suite("lemma2_4", 4, 4, mode="sample", seed=3, sample=25)
    assert report.passed
    assert report.instances_checked == 25


def test_sampled_reports_reproducible():
    a = run_suite("lemma2_4", 4, 4, mode="sample", seed=3, sample=10)
    b = run_suite("lemma2_4", 4, 4, mode="sample", seed=3, sample=10)
    assert a.to_doc() == b.to_doc()


def test_thm2_5_roundtrip_small():
    report = run_suite("thm2_5", 4, 4, seed=5, sample=25)
    assert report.passed
    assert report.instances_checked == 25
    with pytest.raises(UnknownSuiteError):
        run_suite("thm2_5", 3, 3)


def test_thm3_1_small():
    report = run_suite("thm3_1", 3, 3)
    assert report.passed
    assert report.instances_checked == 6


def test_lemma3_1_small():
    report = run_suite("lemma3_1", 3, 3)
    assert report.passed
    assert report.subcases["equality-witness"]["instances"] == 2


def test_thm4_1_and_counts():
    assert run_suite("thm4_1", 3, 3).passed
    assert run_suite("cor4_1", 3, 3).passed


def test_thm3_2_finds_ternary_counterexamples():
    """The doubled-value ternary family is symmetric with gap 2, yet its
    single restrictions have gap 1; the suite must surface every one."""
    report = run_suite("thm3_2", 3, 3)
    assert not report.passed
    assert report.violations_total == 216  # 72 family members x 3 constants
    assert all(v["assertion"] == "thm3_2.iii" for v in report.violations)
    assert report.subcases["i"]["vacuous"] and report.subcases["ii"]["vacuous"]
    # every witness really is in the hypothesis class and really violates
    w = report.violations[0]
    f = FiniteFunction(w["function"]["k"], w["function"]["n"], w["function"]["table"])
    from aritygap import gap, is_symmetric, restrict, essential_count

    assert is_symmetric(f) and gap(f) == 2 and essential_count(f) == 3
    t = restrict(f, 1, w["info"]["c"])
    assert essential_count(t) == 2 and gap(t) == 1


def test_cor3_1_finds_ternary_counterexamples():
    report = run_suite("cor3_1", 3, 3)
    assert not report.passed
    assert report.violations_total == 216


def test_cor4_2_counterexamples_under_reduced_counting():
    report = run_suite("cor4_2", 3, 3)
    assert not report.passed
    assert report.violations_total == 36
    w = report.violations[0]
    assert w["info"]["sub"] < 2**3


def test_thm3_2_passes_above_ternary():
    report = run_suite("thm3_2", 3, 4)
    assert report.passed
    assert report.subcases["ii"]["instances"] > 0
    assert report.subcases["i"]["vacuous"]
    assert any("subcase (i)" in note for note in report.notes)


def test_worker_determinism():
    a = run_suite("lemma2_2", 3, 3, workers=1)
    b = run_suite("lemma2_2", 3, 3, workers=2)
    assert a.to_doc() == b.to_doc()
