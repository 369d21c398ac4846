import logging
from pathlib import Path

from django.core.cache.backends.filebased import FileBasedCache
import numpy as np
import pytest

from ringbench.cache import ResultCache, canonical_json, result_key
from ringbench.core import FiniteRing


@pytest.fixture()
def result_cache(result_cache_backend: FileBasedCache) -> ResultCache:
    return ResultCache(backend=result_cache_backend)


def test_result_key():
    key = result_key('abc', 'radicals', {'oracle': True})
    assert key == result_key('abc', 'radicals', {'oracle': True})
    assert key != result_key('abc', 'radicals', {'oracle': False})
    assert key != result_key('abd', 'radicals', {'oracle': True})
    assert result_key('abc', 'classify') == result_key('abc', 'classify', {})


def test_canonical_json():
    assert canonical_json({'b': np.int64(2), 'a': np.array([True, False])}) == (
        '{"a":[true,false],"b":2}'
    )
    with pytest.raises(TypeError):
        canonical_json({'a': object()})


def test_put_and_get(result_cache: ResultCache, z4: FiniteRing):
    assert result_cache.get(z4.content_hash, 'classify') is None
    result_cache.put(z4.content_hash, 'classify', None, {'potent': False})
    assert result_cache.get(z4.content_hash, 'classify') == {'potent': False}
    assert result_cache.get(z4.content_hash, 'radicals') is None


def test_get_or_compute(result_cache: ResultCache, z4: FiniteRing, caplog):
    calls = []

    def compute():
        calls.append(1)
        return {'nil': (0, 2), 'order': np.int64(4)}

    with caplog.at_level(logging.INFO, logger='ringbench.cache'):
        first = result_cache.get_or_compute(
            z4.content_hash, 'radicals', {'oracle': False}, compute,
        )
        second = result_cache.get_or_compute(
            z4.content_hash, 'radicals', {'oracle': False}, compute,
        )
    assert first == second == {'nil': [0, 2], 'order': 4}
    assert len(calls) == 1
    assert 'Cache miss' in caplog.text
    assert 'Cache hit' in caplog.text


def test_corrupt_entries_are_evicted(
    result_cache: ResultCache,
    result_cache_backend: FileBasedCache,
    z4: FiniteRing,
    caplog,
):
    result_cache.put(z4.content_hash, 'classify', None, {'potent': False})
    files = list(Path(result_cache_backend._dir).glob('*.djcache'))
    assert len(files) == 1
    files[0].write_bytes(b'not a cache entry')
    with caplog.at_level(logging.WARNING, logger='ringbench.cache'):
        assert result_cache.get(z4.content_hash, 'classify') is None
    assert 'Evicting' in caplog.text
    assert not files[0].exists()
    assert result_cache.enabled


def test_mismatched_entries_are_evicted(
    result_cache: ResultCache,
    result_cache_backend: FileBasedCache,
    z4: FiniteRing,
):
    key = result_key(z4.content_hash, 'classify')
    result_cache_backend.set(key, {'key': key, 'ring': 'someone-else', 'result': '{}'})
    assert result_cache.get(z4.content_hash, 'classify') is None
    assert result_cache_backend.get(key) is None
    result_cache_backend.set(key, {'key': key, 'ring': z4.content_hash, 'result': '{'})
    assert result_cache.get(z4.content_hash, 'classify') is None


def test_unwritable_location_disables_cache(tmp_path, z4: FiniteRing, caplog):
    blocker = tmp_path / 'blocker'
    blocker.write_text('')
    cache = ResultCache(backend=FileBasedCache(str(blocker / 'cache'), {'TIMEOUT': None}))
    with caplog.at_level(logging.WARNING, logger='ringbench.cache'):
        cache.put(z4.content_hash, 'classify', None, {'potent': False})
    assert not cache.enabled
    assert 'Result cache disabled' in caplog.text
    assert cache.get(z4.content_hash, 'classify') is None
    assert cache.get_or_compute(z4.content_hash, 'classify', None, lambda: [1]) == [1]


def test_missing_alias_disables_cache(z4: FiniteRing):
    cache = ResultCache(alias='no-such-cache')
    assert cache.backend is None
    assert not cache.enabled
    assert cache.get(z4.content_hash, 'classify') is None


def test_default_alias(z4: FiniteRing):
    cache = ResultCache()
    cache.put(z4.content_hash, 'classify', {'n': 1}, [1, 2])
    assert ResultCache().get(z4.content_hash, 'classify', {'n': 1}) == [1, 2]
    assert ResultCache(enabled=False).get(z4.content_hash, 'classify', {'n': 1}) is None
