"""Suite runner behavior: determinism, seeding, gating, controls."""

import pytest

from diracsplit import Report, RunConfig, run
from diracsplit.suites import DEFAULT_SEED, SUITE_NAMES, _sub_seed


@pytest.fixture(scope="module")
def small_report():
    cfg = RunConfig(trials=6)
    return cfg, run(cfg)


# -- configuration -----------------------------------------------------------


@pytest.mark.parametrize(
    "kwargs",
    [
        {"suite": "spectral"},
        {"rep": "weyl"},
        {"backend": "symbolic"},
        {"tol": 0.0},
        {"tol": -1e-10},
        {"trials": 0},
        {"seed": -1},
        {"seed": 1 << 64},
        {"mass_range": (0.0, 1.0)},
        {"mass_range": (2.0, 1.0)},
        {"momentum_range": (-1.0, 1.0)},
        {"momentum_range": (5.0, 1.0)},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        RunConfig(**kwargs).validate()


def test_config_defaults_are_valid():
    RunConfig().validate()


def test_strict_tol_factor():
    assert RunConfig(tol=1e-8).strict_tol == pytest.approx(1e-10)


def test_config_round_trips_to_dict():
    cfg = RunConfig(suite="weyl", trials=3, seed=7)
    d = cfg.to_dict()
    assert d["suite"] == "weyl" and d["trials"] == 3 and d["seed"] == 7
    assert d["mass_range"] == [0.1, 10.0]


# -- sub-seeding --------------------------------------------------------------


def test_sub_seed_depends_on_all_inputs():
    base = _sub_seed(DEFAULT_SEED, "split", 0)
    assert base != _sub_seed(DEFAULT_SEED, "split", 1)
    assert base != _sub_seed(DEFAULT_SEED, "weyl", 0)
    assert base != _sub_seed(DEFAULT_SEED + 1, "split", 0)
    assert 0 <= base < (1 << 64)


# -- full-run behavior ----------------------------------------------------------


def test_default_run_passes(small_report):
    cfg, report = small_report
    assert isinstance(report, Report)
    assert report.failed == 0
    assert report.passed == len(report.checks) > 0
    assert report.wall_ms > 0


def test_check_ids_unique(small_report):
    _, report = small_report
    ids = [c.check_id for c in report.checks]
    assert len(ids) == len(set(ids))


def test_all_suites_contribute(small_report):
    _, report = small_report
    prefixes = {c.check_id.split(".")[0] for c in report.checks}
    assert prefixes == set(SUITE_NAMES)


def test_controls_present_and_passing(small_report):
    _, report = small_report
    controls = [c for c in report.checks if ".control." in c.check_id]
    ids = {c.check_id for c in controls}
    assert {
        "split.control.offshell-dirac",
        "split.control.massless-rejected",
        "covariance.spinor.control.sign-flip",
        "projectors.control.identity-for-v",
        "covariance.spinor.control.boost01-noncommute",
    } <= ids
    assert all(c.ok for c in controls)


def test_exact_records_have_null_residual(small_report):
    _, report = small_report
    for c in report.checks:
        if c.exact_zero:
            assert c.residual is None
            assert c.backend == "exact"


def test_json_schema_keys(small_report):
    _, report = small_report
    d = report.to_json_dict()
    assert list(d.keys()) == ["config", "checks", "summary", "wall_ms"]
    assert d["summary"] == {"passed": report.passed, "failed": report.failed}
    for c in d["checks"][:5]:
        assert list(c.keys()) == [
            "id", "paper_eq", "backend", "residual", "exact_zero", "pass",
        ]


def test_determinism_modulo_wall_ms():
    cfg = RunConfig(trials=3)
    d1 = run(cfg).to_json_dict()
    d2 = run(cfg).to_json_dict()
    d1.pop("wall_ms")
    d2.pop("wall_ms")
    assert d1 == d2


def test_seed_changes_fuzz_residuals():
    r1 = run(RunConfig(trials=3, seed=1))
    r2 = run(RunConfig(trials=3, seed=2))
    ids1 = [c.check_id for c in r1.checks]
    ids2 = [c.check_id for c in r2.checks]
    assert ids1 == ids2
    res1 = {c.check_id: c.residual for c in r1.checks if ".fuzz." in c.check_id}
    res2 = {c.check_id: c.residual for c in r2.checks if ".fuzz." in c.check_id}
    assert res1 != res2


def test_single_suite_selection():
    report = run(RunConfig(suite="weyl", trials=2))
    assert report.checks
    assert all(c.check_id.startswith("weyl.") for c in report.checks)


def test_exact_only_backend_skips_fuzz():
    report = run(RunConfig(suite="split", backend="exact", trials=2))
    assert report.failed == 0
    assert all(".fuzz." not in c.check_id for c in report.checks)
    assert all(
        c.backend == "exact" for c in report.checks if ".control." not in c.check_id
    )


def test_float_only_backend_has_no_exact_zeros():
    report = run(RunConfig(suite="clifford", backend="float", trials=2))
    assert report.failed == 0
    assert report.checks
    assert all(not c.exact_zero for c in report.checks)


def test_rep_all_covers_every_basis():
    report = run(RunConfig(suite="weyl", rep="all", trials=2))
    for name in ("spinor", "standard", "majorana"):
        assert any(f".{name}." in c.check_id for c in report.checks)


def test_invalid_config_rejected_by_run():
    with pytest.raises(ValueError):
        run(RunConfig(trials=0))
