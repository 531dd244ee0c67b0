import pytest
from hypothesis import settings

from wh3 import verify

settings.register_profile("wh3", derandomize=True, deadline=None)
settings.load_profile("wh3")


@pytest.fixture(scope="session")
def default_reports():
    """One full default-mode verification run shared across the session."""
    reports = verify.run_all()
    return {r.check: r for r in reports}


@pytest.fixture(scope="session")
def errata_off_reports():
    """One full run against the uncorrected transcription."""
    ctx = verify.VerifyContext(errata=False)
    return {r.check: r for r in verify.run_all(ctx)}
