import pytest

import dts.verify as verify
from dts.verify import IdentityId, run_all, run_identity


@pytest.mark.parametrize("identity", list(IdentityId))
def test_each_identity_passes_smoke(identity):
    report = run_identity(identity, trials=3, n_range=(-3, 3), m_range=(1, 3))
    assert report.passed, report.failures
    assert report.seed == verify.DEFAULT_SEED
    assert report.trials == 3


def test_reports_are_reproducible():
    a = run_identity(IdentityId.LEMMA_B, trials=4, seed=99)
    b = run_identity(IdentityId.LEMMA_B, trials=4, seed=99)
    assert (a.passed, a.failures, a.seed) == (b.passed, b.failures, b.seed)


def test_run_all_selection():
    reports = run_all([IdentityId.EQ0_CHEB_MATRIX, IdentityId.S0_EQUIV],
                      trials=2, n_range=(-2, 2), m_range=(1, 2))
    assert [r.identity for r in reports] == ["EQ0_CHEB_MATRIX", "S0_EQUIV"]
    assert all(r.passed for r in reports)


def test_exhaustive_mode():
    report = run_identity(IdentityId.S0_EQUIV, trials=1, n_range=(2, 2),
                          m_range=(1, 1), exhaustive=True)
    assert report.passed


def test_suite_catches_a_corrupted_identity(monkeypatch):
    # sabotage the polynomial the checker trusts; the suite must notice
    monkeypatch.setattr(verify, "gamma_x2", lambda n, x2, z: 1)
    report = run_identity(IdentityId.LEMMA_B, trials=2, n_range=(2, 2))
    assert not report.passed
    assert report.failures


def test_trials_validation():
    with pytest.raises(ValueError):
        run_identity(IdentityId.LEMMA_B, trials=0)
