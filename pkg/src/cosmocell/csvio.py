"""Deterministic file output: CSV tables, JSON sidecars, config dumps.

All writers are atomic (temp file + rename into place), use LF endings and
locale-independent formatting, and floats print at 12 significant digits so
reruns with identical inputs are byte-identical.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path
from typing import Iterable, Mapping, Sequence

__all__ = ["format_value", "write_text", "write_csv", "write_json", "toml_dumps"]


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int,)):
        return str(v)
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def write_text(path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(format_value(v) for v in row) for row in rows)
    write_text(path, "\n".join(lines) + "\n")


def write_json(path, obj) -> None:
    write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _toml_scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return repr(v)
    if isinstance(v, str):
        return json.dumps(v)  # valid TOML basic string
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_toml_scalar(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v).__name__} to the config format")


def toml_dumps(sections: Mapping[str, Mapping[str, object]]) -> str:
    """Serialize a {section: {key: scalar-or-list}} mapping (the only shape
    the config schema uses; a general emitter is deliberately not attempted).
    """
    out = []
    for name, table in sections.items():
        if not table:
            continue
        out.append(f"[{name}]")
        for key, value in table.items():
            out.append(f"{key} = {_toml_scalar(value)}")
        out.append("")
    return "\n".join(out)
