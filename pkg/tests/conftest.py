import os
import sys
from dataclasses import replace

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIX = os.path.join(ROOT, "fixtures")
sys.path.insert(0, os.path.join(ROOT, "tests"))

from mpibind.snapshot import PINNED  # noqa: E402


def fixture_path(*parts):
    return os.path.join(FIX, *parts)


def read_fixture(*parts):
    with open(fixture_path(*parts), encoding="utf-8") as f:
        return f.read()


def pinned_config(config_id="baseline", out=None, **changes):
    cfg = PINNED[config_id].resolve(FIX)
    if out is not None:
        cfg.output_dir = str(out)
    for k, v in changes.items():
        setattr(cfg, k, v)
    return cfg


@pytest.fixture
def baseline(tmp_path):
    return pinned_config("baseline", tmp_path / "out")


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
