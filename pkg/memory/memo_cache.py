"""In-process memo cache shared by the exact-arithmetic layers."""
import threading
from typing import Any, Callable, Dict, Hashable, Optional, Tuple
from loguru import logger


class MemoCache:
    """Namespaced memo store, safe for concurrent readers and idempotent fills."""

    def __init__(self):
        """Initialize empty storage."""
        self._lock = threading.Lock()
        self._storage: Dict[Tuple[str, Hashable], Any] = {}
        self._counts: Dict[str, int] = {}

    def get(self, namespace: str, key: Hashable) -> Optional[Any]:
        """Retrieve a cached value or None."""
        with self._lock:
            return self._storage.get((namespace, key))

    def set(self, namespace: str, key: Hashable, value: Any) -> Any:
        """Store a value; the first writer wins so concurrent fills agree."""
        with self._lock:
            existing = self._storage.get((namespace, key))
            if existing is not None:
                return existing
            self._storage[(namespace, key)] = value
            self._counts[namespace] = self._counts.get(namespace, 0) + 1
        return value

    def get_or_compute(self, namespace: str, key: Hashable, factory: Callable[[], Any]) -> Any:
        """Return the cached value, computing it outside the lock on a miss."""
        value = self.get(namespace, key)
        if value is not None:
            return value
        return self.set(namespace, key, factory())

    def size(self, namespace: str) -> int:
        """Number of entries held in a namespace."""
        with self._lock:
            return self._counts.get(namespace, 0)

    def clear(self, namespace: Optional[str] = None):
        """Drop one namespace, or everything."""
        with self._lock:
            if namespace is None:
                self._storage.clear()
                self._counts.clear()
            else:
                for key in [k for k in self._storage if k[0] == namespace]:
                    del self._storage[key]
                self._counts.pop(namespace, None)
        logger.debug(f"Cleared memo cache {namespace or '(all)'}")


memo_cache = MemoCache()
