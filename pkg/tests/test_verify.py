"""Batch verification suites and their reporting structure."""

from curvint import verify


def test_check_dataclass_reporting():
    c = verify.Check("demo", 1e-12, 1e-9)
    assert c.passed
    d = c.as_dict()
    assert d == {"property": "demo", "max_residual": 1e-12,
                 "threshold": 1e-9, "pass": True}
    assert not verify.Check("demo", 1e-8, 1e-9).passed


def test_full_suite_passes_on_reduced_grid():
    checks = verify.run_verification(z_grid=(-0.5, 0.5), n_points=100,
                                     seed=3)
    assert len(checks) == 15
    assert verify.all_passed(checks)


def test_suites_are_seed_deterministic():
    a = verify.check_algebra(n_points=50, seed=11)
    b = verify.check_algebra(n_points=50, seed=11)
    assert [c.max_residual for c in a] == [c.max_residual for c in b]
