"""On-disk caches for decided pairs and built components.

Every write goes to a temporary file in the target directory followed by
``os.replace``, so concurrent runs never observe a partial file.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .graphs import export_json, from_json_dict, with_root
from .products import Mode
from .words import shortlex_key


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _digest(*parts) -> str:
    return hashlib.sha256(json.dumps(parts, default=str).encode()).hexdigest()


def _base_id(base) -> str:
    return base.ident or repr(base)


class PairCache:
    """Verdicts keyed by (base id, mode, shortlex-ordered pair), one file per pair."""

    def __init__(self, root):
        self.root = Path(root) / "pairs"

    def _path(self, base, mode, u, v) -> Path:
        u, v = sorted((tuple(u), tuple(v)), key=lambda w: shortlex_key(base, w))
        return self.root / f"{_digest(_base_id(base), Mode(mode).value, u, v)}.json"

    def get(self, base, mode, u, v):
        path = self._path(base, mode, u, v)
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding="utf-8"))["equivalent"]

    def put(self, base, mode, u, v, verdict: bool) -> None:
        atomic_write(self._path(base, mode, u, v), json.dumps({"equivalent": bool(verdict)}))


class ComponentCache:
    """Component JSON stored under the SHA-256 of (base id, mode, least vertex).

    A per-word index file points each looked-up word at its component file.
    """

    def __init__(self, root):
        self.root = Path(root)

    def _index_path(self, base, mode, w) -> Path:
        return self.root / "index" / _digest(_base_id(base), Mode(mode).value, list(w))

    def component_key(self, base, mode, least) -> str:
        return _digest(_base_id(base), Mode(mode).value, list(least))

    def load(self, base, mode, w):
        index = self._index_path(base, mode, w)
        if not index.exists():
            return None
        path = self.root / "components" / f"{index.read_text().strip()}.json"
        if not path.exists():
            return None
        return with_root(from_json_dict(json.loads(path.read_text(encoding="utf-8"))), w)

    def store(self, base, mode, g) -> None:
        key = self.component_key(base, mode, g.vertices[0])
        path = self.root / "components" / f"{key}.json"
        if not path.exists():
            atomic_write(path, export_json(g))
        atomic_write(self._index_path(base, mode, g.root), key)
