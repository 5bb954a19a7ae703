"""JSON readers and writers for monoids, acts and congruences.

Monoid: ``{"n": int, "table": [[int]], "names": [str]?}``.
Act: ``{"monoid": <monoid object or path>, "m": int, "action": [[int]], "names": [str]?}``;
a path is resolved relative to the act file.
Congruence: ``{"labels": [int]}`` with canonical labels.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from acta.act import Act, validate_act
from acta.congruence import Congruence, congruence
from acta.errors import ParseError
from acta.monoid import Monoid, validate_monoid


def _read(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _int_rows(obj: Any, what: str) -> list[list[int]]:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(f"{what} must be a list of lists")
    for row in obj:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ParseError(f"{what} entries must be integers")
    return obj


def _names(obj: dict, count: int) -> list[str] | None:
    names = obj.get("names")
    if names is None:
        return None
    if not isinstance(names, list) or len(names) != count:
        raise ParseError(f"names must be a list of {count} strings")
    if len(set(map(str, names))) != count:
        raise ParseError("names must be distinct")
    return [str(x) for x in names]


def monoid_from_json(obj: Any) -> Monoid:
    if not isinstance(obj, dict) or "table" not in obj:
        raise ParseError('a monoid needs a "table" field')
    table = _int_rows(obj["table"], "table")
    n = obj.get("n", len(table))
    if n != len(table) or any(len(r) != n for r in table):
        raise ParseError(f"table is not {n}×{n}")
    return validate_monoid(table, _names(obj, n))


def monoid_to_json(M: Monoid) -> dict:
    out: dict[str, Any] = {"n": M.size, "table": M.table.tolist()}
    if M.names:
        out["names"] = list(M.names)
    return out


def act_from_json(obj: Any, base: Path | None = None) -> Act:
    if not isinstance(obj, dict) or "action" not in obj or "monoid" not in obj:
        raise ParseError('an act needs "monoid" and "action" fields')
    ref = obj["monoid"]
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        M = monoid_from_json(_read(path))
    else:
        M = monoid_from_json(ref)
    action = _int_rows(obj["action"], "action")
    m = obj.get("m", len(action))
    if m != len(action):
        raise ParseError(f"m = {m} but the action has {len(action)} rows")
    if any(len(r) != M.size for r in action):
        raise ParseError(f"action rows must have one entry per monoid element ({M.size})")
    return validate_act(M, action, _names(obj, m))


def act_to_json(A: Act, inline_monoid: bool = True) -> dict:
    out: dict[str, Any] = {
        "monoid": monoid_to_json(A.monoid) if inline_monoid else None,
        "m": A.size,
        "action": A.action.tolist(),
    }
    if A.names:
        out["names"] = list(A.names)
    return out


def congruence_from_json(A: Act, obj: Any) -> Congruence:
    if not isinstance(obj, dict) or not isinstance(obj.get("labels"), list):
        raise ParseError('a congruence needs a "labels" list')
    return congruence(A, obj["labels"])


def congruence_to_json(c: Congruence) -> dict:
    return {"labels": list(c.labels)}


def load_monoid(path: str | Path) -> Monoid:
    return monoid_from_json(_read(path))


def load_act(path: str | Path) -> Act:
    return act_from_json(_read(path), Path(path).parent)


def load_any(path: str | Path) -> Monoid | Act:
    """An act if the file has an ``action`` field, else a monoid."""
    obj = _read(path)
    if isinstance(obj, dict) and "action" in obj:
        return act_from_json(obj, Path(path).parent)
    return monoid_from_json(obj)


_FLAT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(obj: Any) -> str:
    """Indented JSON with innermost integer lists kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text) + "\n"
