from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

# file logging off and a quiet console before any project module is imported
os.environ.setdefault('ISOPX_LOG_DIR', '')
os.environ.setdefault('ISOPX_LOG_LEVEL', 'WARNING')

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from generators import make_oracle  # noqa: E402


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run slow exhaustive searches')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive search taking minutes; needs --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope='session')
def grid2():
    return make_oracle('grid:d=2')


@pytest.fixture(scope='session')
def grid1():
    return make_oracle('grid:d=1')


@pytest.fixture(scope='session')
def tree3():
    return make_oracle('tree:d=3')


@pytest.fixture(scope='session')
def tree4():
    return make_oracle('tree:d=4')


@pytest.fixture(scope='session')
def lamplighter():
    return make_oracle('lamplighter')


@pytest.fixture(scope='session')
def grandfather():
    return make_oracle('grandfather')


@pytest.fixture(scope='session')
def schema_dir() -> Path:
    return ROOT / 'schemas'
