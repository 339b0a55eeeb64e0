"""In-process memo caches."""
