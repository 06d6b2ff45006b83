"""File formats: strict JSON configs, records CSV, atomic writes."""
from __future__ import annotations

import csv
import io
import json
import math
import os
import re
import tempfile
from pathlib import Path
from typing import Optional, Sequence, Union

from .basis import HypothesisSpace
from .bounds import BoundContext
from .errors import SchemaError
from .experiments import ExperimentConfig

ConfigObject = Union[ExperimentConfig, HypothesisSpace, BoundContext]

_INT_RE = re.compile(r"^[+-]?\d+$")


def atomic_write(path: Union[str, Path], data: Union[str, bytes]) -> None:
    """Write to a temporary sibling then rename, so readers never see partial files."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": ""})) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _jsonable(v):
    if isinstance(v, float):
        if math.isnan(v):
            return None
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item") and not isinstance(v, (str, bytes)):  # numpy scalar
        return _jsonable(v.item())
    return v


def dumps_json(obj) -> str:
    """Deterministic JSON; NaN becomes null and infinities become strings."""
    return json.dumps(_jsonable(obj), indent=2, allow_nan=False) + "\n"


def _reject_constants(name):
    raise SchemaError(f"non-standard JSON constant {name}")


def load_json(path: Union[str, Path]):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SchemaError(f"{path}: file not found") from None
    try:
        return json.loads(text, parse_constant=_reject_constants)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def config_from_obj(obj, kind: Optional[str] = None) -> ConfigObject:
    if not isinstance(obj, dict):
        raise SchemaError("top-level value must be an object")
    if kind is None:
        if "name" in obj:
            kind = "experiment"
        elif "Q" in obj:
            kind = "space"
        elif "B_f" in obj:
            kind = "context"
        else:
            raise SchemaError("cannot tell config type: expected key 'name', 'Q' or 'B_f'")
    if kind == "experiment":
        return ExperimentConfig.from_dict(obj)
    if kind == "space":
        return HypothesisSpace.from_dict(obj)
    if kind == "context":
        return BoundContext.from_dict(obj)
    raise ValueError(f"unknown config kind {kind!r}")


def parse_config(path: Union[str, Path], kind: Optional[str] = None) -> ConfigObject:
    """Load a JSON config and validate it against the matching schema.

    ``kind`` is one of ``experiment``, ``space``, ``context``; when omitted
    it is inferred from the keys present.
    """
    obj = load_json(path)
    try:
        return config_from_obj(obj, kind)
    except SchemaError as exc:
        raise SchemaError(f"{path}: {exc}") from None


# --- records CSV -------------------------------------------------------------

def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def records_to_csv(records: Sequence[dict], comment: str = "") -> str:
    if not records:
        raise ValueError("no records")
    cols = list(records[0])
    buf = io.StringIO()
    buf.write(f"# {comment + '; ' if comment else ''}columns: {','.join(cols)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        if list(r) != cols:
            raise ValueError("records have inconsistent columns")
        w.writerow([_fmt(r[c]) for c in cols])
    return buf.getvalue()


def _parse_cell(s: str, lineno: int, col: str):
    if _INT_RE.match(s):
        return int(s)
    try:
        return float(s)
    except ValueError:
        raise SchemaError(f"line {lineno}, column {col!r}: not a number: {s!r}") from None


def records_from_csv(text: str) -> list[dict]:
    lines = text.splitlines()
    body = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not body:
        raise SchemaError("records CSV has no header")
    header_line, header = body[0]
    cols = next(csv.reader([header]))
    out = []
    for lineno, ln in body[1:]:
        cells = next(csv.reader([ln]))
        if len(cells) != len(cols):
            raise SchemaError(f"line {lineno}: expected {len(cols)} fields, got {len(cells)}")
        out.append({c: _parse_cell(v, lineno, c) for c, v in zip(cols, cells)})
    return out


def read_records(path: Union[str, Path]) -> list[dict]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SchemaError(f"{path}: file not found") from None
    return records_from_csv(text)


def write_experiment_outputs(out_dir: Union[str, Path], name: str, records: Sequence[dict], summary: dict) -> tuple[Path, Path]:
    out_dir = Path(out_dir)
    rec_path = out_dir / f"{name}_records.csv"
    sum_path = out_dir / f"{name}_summary.json"
    per = "one row per run and eps" if name == "wz_compare" else "one row per run"
    atomic_write(rec_path, records_to_csv(records, f"{name} records, {per}"))
    atomic_write(sum_path, dumps_json(summary))
    return rec_path, sum_path
