import pytest
import structlog


@pytest.fixture(autouse=True)
def _restore_structlog_config():
    """Keep a test's logging setup (bound to its captured stderr) from leaking into later tests."""
    saved = structlog.get_config()
    yield
    structlog.configure(**saved)
