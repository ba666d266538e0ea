"""Disk persistence for computed count tables.

The file format is a single JSON object:

    {"format": "formula-forge-counts", "version": 1,
     "entries": [["ame", "+", 6, "25"], ...]}

Counts are decimal strings (they overflow doubles long before n = 100).
Loading validates the whole file before absorbing anything; a malformed or
inconsistent file is rejected wholesale with CacheError so a partial or
corrupted cache can never poison in-memory tables.  Saving writes to a
temporary file and renames over the target, so readers never see a torn
file.  The environment variable FORMULA_FORGE_CACHE names a default cache
path honored by the command-line tool.
"""

from __future__ import annotations

import json
import os
import tempfile

from .counting import CountTable, default_table
from .errors import CacheError

FORMAT_NAME = "formula-forge-counts"
FORMAT_VERSION = 1
ENV_VAR = "FORMULA_FORGE_CACHE"

_FAMILIES = {"a", "lop", "am", "ame"}
_ROOTS = {"a": {"all"}, "lop": {"all"}, "am": {"+", "*"}, "ame": {"+", "*", "^"}}


def save_table(path: str, table: CountTable | None = None) -> int:
    """Write every computed entry of the table; returns the row count."""
    t = table if table is not None else default_table()
    rows = [[fam, root, n, str(c)] for fam, root, n, c in t.entries()]
    payload = {"format": FORMAT_NAME, "version": FORMAT_VERSION, "entries": rows}
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(prefix=".counts-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return len(rows)


def _validate(payload) -> list:
    if not isinstance(payload, dict):
        raise CacheError("cache file is not a JSON object")
    if payload.get("format") != FORMAT_NAME:
        raise CacheError(f"unrecognized format marker {payload.get('format')!r}")
    if payload.get("version") != FORMAT_VERSION:
        raise CacheError(f"unsupported cache version {payload.get('version')!r}")
    entries = payload.get("entries")
    if not isinstance(entries, list):
        raise CacheError("entries must be a list")
    rows = []
    for row in entries:
        if not (isinstance(row, list) and len(row) == 4):
            raise CacheError(f"malformed row {row!r}")
        fam, root, n, count = row
        if fam not in _FAMILIES:
            raise CacheError(f"unknown family {fam!r}")
        if root not in _ROOTS[fam]:
            raise CacheError(f"family {fam!r} cannot have root {root!r}")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise CacheError(f"bad index {n!r}")
        if not isinstance(count, str) or not count.isdigit():
            raise CacheError(f"count must be a decimal string, got {count!r}")
        rows.append((fam, root, n, int(count)))
    return rows


def load_table(path: str, table: CountTable | None = None) -> int:
    """Absorb a saved cache into the table; returns rows accepted.

    Raises CacheError (and absorbs nothing) if the file fails validation.
    """
    t = table if table is not None else default_table()
    try:
        with open(path, "r") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise CacheError(f"cannot read cache file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CacheError(f"cache file is not valid JSON: {exc}") from exc
    rows = _validate(payload)
    t.absorb(rows)
    return len(rows)
