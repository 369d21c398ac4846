"""Content-addressed results keyed by (ring hash, operation, parameters).

Results are stored as canonical JSON text in the Django cache registered
under `RINGBENCH_CACHE_ALIAS`; the file-based backend writes through a
temporary file and a rename.
"""
import hashlib
import json
import logging
import pickle
from typing import Any, Callable, Dict, Optional
import zlib

from django.core.cache import caches
from django.core.cache.backends.base import BaseCache, InvalidCacheBackendError
import numpy as np

from ringbench.conf import settings

logger = logging.getLogger(__name__)

KEY_PREFIX = 'ringbench-result-v1'

# Raised by the file-based backend on truncated or foreign entries
CORRUPT_ENTRY_ERRORS = (EOFError, ValueError, TypeError, zlib.error, pickle.UnpicklingError)


def json_default(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f'{type(value).__name__} is not JSON serialisable')


def canonical_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(',', ':'), default=json_default)


def result_key(ring_hash: str, operation: str, params: Optional[Dict[str, Any]] = None) -> str:
    digest = hashlib.sha256(KEY_PREFIX.encode())
    digest.update(canonical_json([ring_hash, operation, params or {}]).encode())
    return digest.hexdigest()


class ResultCache:
    def __init__(
        self,
        alias: Optional[str] = None,
        enabled: bool = True,
        backend: Optional[BaseCache] = None,
    ):
        self.alias = alias or settings.CACHE_ALIAS
        self.enabled = enabled
        self._backend = backend

    @property
    def backend(self) -> Optional[BaseCache]:
        if self.enabled and self._backend is None:
            try:
                self._backend = caches[self.alias]
            except InvalidCacheBackendError:
                self.disable(f'no cache is configured under {self.alias!r}')
        return self._backend

    def disable(self, reason: str) -> None:
        logger.warning('Result cache disabled: %s', reason)
        self.enabled = False
        self._backend = None

    def get(self, ring_hash: str, operation: str, params: Optional[Dict[str, Any]] = None) -> Any:
        """The cached result, or None on a miss; damaged or stale entries are evicted."""
        backend = self.backend
        if backend is None:
            return None
        key = result_key(ring_hash, operation, params)
        try:
            entry = backend.get(key)
        except CORRUPT_ENTRY_ERRORS as error:
            return self._evict(key, f'unreadable entry ({error})')
        except OSError as error:
            self.disable(f'cannot read {self.alias!r}: {error}')
            return None
        if entry is None:
            logger.info('Cache miss: %s on %s', operation, ring_hash[:12])
            return None
        if (
            not isinstance(entry, dict)
            or entry.get('key') != key
            or entry.get('ring') != ring_hash
            or not isinstance(entry.get('result'), str)
        ):
            return self._evict(key, 'entry does not match its key')
        try:
            result = json.loads(entry['result'])
        except json.JSONDecodeError:
            return self._evict(key, 'entry holds malformed JSON')
        logger.info('Cache hit: %s on %s', operation, ring_hash[:12])
        return result

    def put(
        self,
        ring_hash: str,
        operation: str,
        params: Optional[Dict[str, Any]],
        result: Any,
    ) -> None:
        backend = self.backend
        if backend is None:
            return
        key = result_key(ring_hash, operation, params)
        entry = {'key': key, 'ring': ring_hash, 'result': canonical_json(result)}
        try:
            backend.set(key, entry, timeout=None)
        except OSError as error:
            self.disable(f'cannot write {self.alias!r}: {error}')

    def get_or_compute(
        self,
        ring_hash: str,
        operation: str,
        params: Optional[Dict[str, Any]],
        compute: Callable[[], Any],
    ) -> Any:
        cached = self.get(ring_hash, operation, params)
        if cached is not None:
            return cached
        # Normalised through JSON so misses and hits return the same values
        result = json.loads(canonical_json(compute()))
        self.put(ring_hash, operation, params, result)
        return result

    def _evict(self, key: str, reason: str) -> None:
        logger.warning('Evicting cache entry %s: %s', key[:12], reason)
        backend = self._backend
        if backend is not None:
            try:
                backend.delete(key)
            except OSError as error:
                self.disable(f'cannot evict from {self.alias!r}: {error}')
        return None
