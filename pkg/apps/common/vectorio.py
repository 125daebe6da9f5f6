"""
Complex-vector text format.

One sample per line as ``re im`` in decimal floating point. Lines starting
with ``#`` are comments and blank lines are ignored. The path ``-`` stands
for stdin/stdout.
"""

import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from apps.common.exceptions import FileAccessError, VectorFormatError

PathLike = Union[str, Path]


def parse_complex_vector(lines: Iterable[str]) -> np.ndarray:
    samples = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise VectorFormatError(
                f"expected 're im', found {len(fields)} field(s)", line_number
            )
        try:
            re_part, im_part = float(fields[0]), float(fields[1])
        except ValueError as exc:
            raise VectorFormatError(str(exc), line_number) from exc
        if not (np.isfinite(re_part) and np.isfinite(im_part)):
            raise VectorFormatError("non-finite sample", line_number)
        samples.append(complex(re_part, im_part))
    if not samples:
        raise VectorFormatError("vector has no samples")
    return np.array(samples, dtype=np.complex128)


def format_complex_vector(values: np.ndarray, comment: Optional[str] = None) -> str:
    """Render ``values`` byte-stably (shortest round-trip float repr)."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    for value in np.asarray(values, dtype=np.complex128):
        out.append(f"{float(value.real)!r} {float(value.imag)!r}")
    return "\n".join(out) + "\n"


def read_vector(path: PathLike, stdin: Optional[TextIO] = None) -> np.ndarray:
    if str(path) == "-":
        return parse_complex_vector((stdin or sys.stdin).readlines())
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileAccessError(f"cannot read {path}: {exc}") from exc
    return parse_complex_vector(lines)


def write_vector(
    path: PathLike,
    values: np.ndarray,
    comment: Optional[str] = None,
    stdout: Optional[TextIO] = None,
) -> None:
    text = format_complex_vector(values, comment)
    if str(path) == "-":
        (stdout or sys.stdout).write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise FileAccessError(f"cannot write {path}: {exc}") from exc
