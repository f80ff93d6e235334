import pytest

from annulus_bounds.verification import SUITES, VerifyRow, rows_to_csv, run_suite


def test_run_suite_all_passes():
    rows = run_suite("all", R=2.0, dim=4, samples=6, seed=7)
    assert rows, "suite produced no rows"
    failures = [r for r in rows if not r.passed]
    assert not failures, failures


def test_suites_partition_the_rows():
    kernels = run_suite("kernels", dim=3, samples=3)
    lemma = run_suite("lemma", samples=3)
    sbound = run_suite("sbound", dim=3, samples=3)
    assert all(r.name.startswith(("kernel", "cauchy", "transform")) for r in kernels)
    assert all(r.name.startswith("lemma") for r in lemma)
    assert all(r.name.startswith("sbound") for r in sbound)
    combined = run_suite("all", dim=3, samples=3)
    assert len(combined) == len(kernels) + len(lemma) + len(sbound)


def test_required_checks_present():
    names = {r.name for r in run_suite("all", dim=3, samples=3)}
    for needed in (
        "kernel_psd_min_eig_quantum",
        "kernel_psd_min_eig_numerical",
        "kernel_mass_quantum",
        "kernel_mass_numerical",
        "cauchy_monomial_error",
        "transform_unit_matrix",
        "lemma_sup_g",
        "lemma_sup_centered",
        "lemma_split_identity",
        "lemma_unit_gap_identity",
        "sbound_quantum_norm",
        "sbound_numerical_min_shift_norm",
    ):
        assert needed in names, needed


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")
    assert "all" in SUITES


def test_rows_to_csv_format():
    rows = [
        VerifyRow("alpha", 1.25e-12, 1e-9, True),
        VerifyRow("beta", 3.0, 2.0, False),
    ]
    csv = rows_to_csv(rows)
    lines = csv.strip().split("\n")
    assert lines[0] == "name,value,bound,pass"
    assert lines[1] == "alpha,1.25e-12,1e-09,true"
    assert lines[2] == "beta,3,2,false"
    assert csv.endswith("\n")
