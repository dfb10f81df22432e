# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-16 10:47

import pytest

from punctual.__version__ import __version__
from punctual.cache import FileCache, cache_key, key_digest
from punctual.errors import CacheException


@pytest.fixture
def cache(tmp_path):
    return FileCache({'cache_dir': str(tmp_path / "entries")})


def test_key():
    key = cache_key("hilbert", "enumerate_o_sequences", {'k': 4})

    assert key['version'] == __version__
    assert key_digest(key) == key_digest(dict(reversed(list(key.items()))))
    assert key_digest(key) != key_digest(
        cache_key("hilbert", "enumerate_o_sequences", {'k': 5})
    )


def test_needs_directory():
    with pytest.raises(CacheException):
        FileCache({})


def test_io_failure_is_cache_error(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    cache = FileCache({'cache_dir': str(blocker)})
    key = cache_key("hilbert", "enumerate_o_sequences", {'k': 3})

    with pytest.raises(CacheException):
        cache.put(key, [1])
    assert cache.entries() == []


def test_put_get(cache):
    key = cache_key("monomial", "enumerate_strongly_stable", {'n': 3, 'k': 2})

    assert cache.get(key) is None
    assert cache.entries() == []

    cache.put(key, [{'n': 3, 'gens': ["x1^2"]}])

    assert cache.get(key) == [{'n': 3, 'gens': ["x1^2"]}]
    assert cache.entries() == [(key, [{'n': 3, 'gens': ["x1^2"]}])]
    assert cache.clear() == 1
    assert cache.get(key) is None


def test_stale_key(cache):
    key = cache_key("hilbert", "enumerate_o_sequences", {'k': 3})
    cache.put(key, [[1, 2]])
    other = dict(key, version="0.0.0")

    assert cache.get(other) is None


def test_controller_uses_cache(cached_controller):
    first = cached_controller.o_sequences(4)

    assert len(first) == 3
    assert cached_controller.cache_status()['entries'] == 1
    assert cached_controller.o_sequences(4) == first
    assert cached_controller.cache_status()['operations'] == {
        'hilbert.enumerate_o_sequences': 1,
    }


def test_spot_check_repairs(cached_controller):
    first = cached_controller.o_sequences(4)
    key = cache_key("hilbert", "enumerate_o_sequences", {'k': 4})
    cached_controller.cache.put(key, [[1]])

    assert cached_controller.o_sequences(4) == first
    assert cached_controller.cache.get(key) == first


def test_rebuild(cached_controller):
    cached_controller.o_sequences(3)
    cached_controller.enumerate_ideals("borel", 3, 3)

    assert cached_controller.cache_rebuild()['diffs'] == []

    key = cache_key("hilbert", "enumerate_o_sequences", {'k': 3})
    cached_controller.cache.put(key, [[1]])
    res = cached_controller.cache_rebuild()

    assert res['entries'] == 2
    assert res['diffs'] == [key]
    assert cached_controller.cache_rebuild()['diffs'] == []


def test_clear(cached_controller):
    cached_controller.o_sequences(2)

    assert cached_controller.cache_clear()['removed'] == 1
    assert cached_controller.cache_status()['entries'] == 0


def test_without_cache(controller):
    assert controller.cache_status() == {'cache_dir': None, 'entries': 0}
    assert controller.cache_rebuild()['diffs'] == []
