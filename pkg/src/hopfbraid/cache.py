"""On-disk cache for multiplication tables.

Only an optimization: every consumer recomputes when an entry is missing
or unreadable, and results are identical with the cache disabled.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .cyclotomic import CyclotomicScalar

FORMAT_VERSION = 1


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "hopfbraid"


class TableCache:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def load(self, key: str):
        path = self._path(key)
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
            if obj.get("version") != FORMAT_VERSION:
                return None
            dec = CyclotomicScalar.from_json
            mult = [[{int(k): dec(c) for k, c in cell} for cell in row] for row in obj["mult"]]
            unit = {int(k): dec(c) for k, c in obj["unit"]}
            return mult, unit
        except (OSError, ValueError, KeyError, TypeError):
            return None

    def store(self, key: str, mult, unit) -> None:
        enc = lambda d: [[k, c.to_json()] for k, c in sorted(d.items())]  # noqa: E731
        obj = {"version": FORMAT_VERSION, "mult": [[enc(cell) for cell in row] for row in mult], "unit": enc(unit)}
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(obj, fh, sort_keys=True)
            os.replace(tmp, self._path(key))
        except OSError:
            # a read-only or full disk just means no caching
            pass
