import hashlib
import json
import logging
import os
import tempfile
from functools import cache
from pathlib import Path

from . import __version__
from .records import Quantity, Source

# Modules whose code decides the cached numbers.
_COUNTING_MODULES = ("core.py", "linalg.py", "enumeration.py", "sequences.py")


@cache
def code_version() -> str:
    """SHA-1 over the package version and the source of the counting modules."""
    digest = hashlib.sha1(__version__.encode())
    package_dir = Path(__file__).parent
    for name in _COUNTING_MODULES:
        digest.update((package_dir / name).read_bytes())
    return digest.hexdigest()[:16]


class CountsCache:
    """
    Persistent store of computed counts, one JSON file.
    Entries written by a different code version are ignored on load and
    dropped on save.
    """

    def __init__(self, path: str | Path, version: str | None = None):
        if not isinstance(path, Path):
            path = Path(path)
        self.path = path
        self.version = version or code_version()
        self._entries = self._load()
        self._dirty = False

    def __enter__(self) -> "CountsCache":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def key(self, quantity: Quantity, n: int, source: Source) -> str:
        return f"{quantity.value}|{n}|{source.value}|{self.version}"

    def _load(self) -> dict[str, int]:
        if not self.path.exists():
            logging.debug(f"No counts cache at {self.path} yet")
            return {}

        try:
            entries = json.loads(self.path.read_text())["entries"]
            current = {key: value for key, value in entries.items()
                       if key.rsplit("|", 1)[-1] == self.version}
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as e:
            logging.warning(f"Ignoring unreadable counts cache {self.path}: {e}")
            return {}

        stale = len(entries) - len(current)
        if stale:
            logging.info(f"Ignoring {stale} cache entries from another code version")

        for key, value in list(current.items()):
            # bool is an int subclass but never a count
            if type(value) is not int:
                logging.warning(f"Ignoring cache entry {key}: {value!r} is not an integer")
                del current[key]
        return current

    def get(self, quantity: Quantity, n: int, source: Source) -> int | None:
        value = self._entries.get(self.key(quantity, n, source))
        if value is None:
            logging.debug(f"Cache miss for {quantity.value}_{n} ({source.value})")
        else:
            logging.debug(f"Cache hit for {quantity.value}_{n} ({source.value})")
        return value

    def put(self, quantity: Quantity, n: int, source: Source, value: int) -> None:
        self._entries[self.key(quantity, n, source)] = value
        self._dirty = True

    def save(self) -> None:
        """Write the cache atomically: temp file in the same directory, then rename."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=self.path.parent, prefix=f".{self.path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as f:
                json.dump({"entries": dict(sorted(self._entries.items()))}, f, indent=1)
            os.replace(tmp_name, self.path)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise
        self._dirty = False

    def close(self) -> None:
        """Save pending entries."""
        if self._dirty:
            self.save()
