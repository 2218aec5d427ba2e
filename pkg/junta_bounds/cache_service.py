"""
junta_bounds/cache_service.py
───────
Local result cache: computed outputs are stored as files named by a content
hash of (command, parameters, code version), so rerunning a command with
unchanged inputs returns byte-identical output without recomputation.
"""

import hashlib
import json
import logging
import os
import tempfile
import typing as t
from pathlib import Path

from junta_bounds import __version__
from junta_bounds.config import get_settings

logger = logging.getLogger(__name__)


def atomic_write(path: t.Union[str, Path], text: str) -> Path:
    """Write through a temporary file in the same directory, then rename over the target."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    return target


class ResultCache:
    """Content-addressed store of command outputs under the configured cache directory."""

    def __init__(self, root: t.Optional[t.Union[str, Path]] = None, version: str = __version__) -> None:
        self.root = Path(root) if root is not None else get_settings().cache_dir
        self.version = version
        logger.debug("[ResultCache] Initialized at %s (version %s)", self.root, self.version)

    def key(self, command: str, params: t.Mapping[str, t.Any]) -> str:
        payload = json.dumps(
            {"command": command, "params": dict(params), "version": self.version}, sort_keys=True
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.txt"

    def get(self, key: str) -> t.Optional[str]:
        path = self._path(key)
        if not path.exists():
            return None
        logger.info("[ResultCache] hit %s", key[:12])
        return path.read_text(encoding="utf-8")

    def put(self, key: str, text: str) -> None:
        atomic_write(self._path(key), text)
        logger.info("[ResultCache] stored %s", key[:12])

    def get_or_compute(self, command: str, params: t.Mapping[str, t.Any], compute: t.Callable[[], str]) -> str:
        key = self.key(command, params)
        cached = self.get(key)
        if cached is not None:
            return cached
        text = compute()
        self.put(key, text)
        return text
