"""Deterministic text output shared by the CLI and the report renderer.

Floats are passed through a 15-significant-digit round trip before JSON
or CSV serialization so identical inputs always produce byte-identical
files; LF line endings, UTF-8.
"""
import json
import numpy as np


def round15(x) -> float:
    return float(format(float(x), ".15g"))


def jsonable(obj):
    """Recursively convert to plain JSON types with rounded floats."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"real": round15(obj.real), "imag": round15(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        return round15(obj)
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"not serializable: {type(obj)!r}")


def dump_json(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, ensure_ascii=False) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".15g")
    if isinstance(v, (complex, np.complexfloating)):
        return format(float(v.real), ".15g") + "+" + format(float(v.imag), ".15g") + "j"
    return str(v)


def dump_csv(header, rows) -> str:
    lines = [",".join(str(h) for h in header)]
    for row in rows:
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
