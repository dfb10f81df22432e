# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-14 19:20

import pytest

from punctual.controller import Punctual
from punctual.golden import WORKED_IDEAL
from punctual.monomial import MonomialIdeal


@pytest.fixture
def controller():
    instance = Punctual({'jobs': 1, 'seed': 1, 'trials': 20})
    yield instance
    instance.close()


@pytest.fixture
def cached_controller(tmp_path):
    instance = Punctual({
        'jobs': 1, 'seed': 1, 'cache_dir': str(tmp_path / "cache"),
    })
    yield instance
    instance.close()


@pytest.fixture
def worked_ideal():
    return MonomialIdeal.parse(WORKED_IDEAL, 3)
