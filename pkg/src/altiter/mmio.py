"""MatrixMarket reader and writer for dense real matrices.

Supports the ``array`` layout (dense, column-major) and the
``coordinate`` layout (1-based indices) with field ``real`` or
``integer`` and symmetry ``general``.  Array files written by
:func:`save_matrix` round-trip bit-identically: entries are printed with
``repr``, which is shortest-exact for doubles.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import MatrixMarketError

_HEADER_PREFIX = "%%matrixmarket"


def _tokenize(path):
    """Yield (line_number, tokens) for non-comment, non-blank lines."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if lineno == 1:
                yield lineno, raw.strip().lower().split()
                continue
            stripped = raw.strip()
            if not stripped or stripped.startswith("%"):
                continue
            yield lineno, stripped.split()


def load_matrix(path: str | os.PathLike) -> np.ndarray:
    """Read one dense matrix from a MatrixMarket file."""
    lines = _tokenize(path)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MatrixMarketError(1, "empty file") from None
    if len(header) != 5 or header[0] != _HEADER_PREFIX:
        raise MatrixMarketError(1, "missing '%%MatrixMarket object format field symmetry' header")
    _, obj, layout, field, symmetry = header
    if obj != "matrix":
        raise MatrixMarketError(1, f"unsupported object {obj!r} (only 'matrix')")
    if layout not in ("array", "coordinate"):
        raise MatrixMarketError(1, f"unsupported format {layout!r}")
    if field not in ("real", "integer"):
        raise MatrixMarketError(1, f"unsupported field {field!r} (only 'real'/'integer')")
    if symmetry != "general":
        raise MatrixMarketError(1, f"unsupported symmetry {symmetry!r} (only 'general')")

    try:
        size_lineno, size = next(lines)
    except StopIteration:
        raise MatrixMarketError(2, "missing size line") from None

    if layout == "array":
        return _read_array(size_lineno, size, lines)
    return _read_coordinate(size_lineno, size, lines)


def _read_array(size_lineno, size, lines) -> np.ndarray:
    if len(size) != 2:
        raise MatrixMarketError(size_lineno, "array size line must be 'rows cols'")
    try:
        rows, cols = int(size[0]), int(size[1])
    except ValueError:
        raise MatrixMarketError(size_lineno, f"bad dimensions {' '.join(size)!r}") from None
    if rows < 0 or cols < 0:
        raise MatrixMarketError(size_lineno, "dimensions must be nonnegative")
    values = []
    last_lineno = size_lineno
    for lineno, tokens in lines:
        last_lineno = lineno
        for tok in tokens:
            try:
                values.append(float(tok))
            except ValueError:
                raise MatrixMarketError(lineno, f"bad entry {tok!r}") from None
    if len(values) != rows * cols:
        raise MatrixMarketError(
            last_lineno,
            f"expected {rows * cols} entries, found {len(values)}",
        )
    # array layout stores entries column by column
    return np.array(values).reshape((cols, rows)).T


def _read_coordinate(size_lineno, size, lines) -> np.ndarray:
    if len(size) != 3:
        raise MatrixMarketError(size_lineno, "coordinate size line must be 'rows cols nnz'")
    try:
        rows, cols, nnz = (int(tok) for tok in size)
    except ValueError:
        raise MatrixMarketError(size_lineno, f"bad size line {' '.join(size)!r}") from None
    if rows < 0 or cols < 0 or nnz < 0:
        raise MatrixMarketError(size_lineno, "sizes must be nonnegative")
    out = np.zeros((rows, cols))
    count = 0
    last_lineno = size_lineno
    for lineno, tokens in lines:
        last_lineno = lineno
        if len(tokens) != 3:
            raise MatrixMarketError(lineno, "coordinate entries need 'row col value'")
        try:
            i, j, value = int(tokens[0]), int(tokens[1]), float(tokens[2])
        except ValueError:
            raise MatrixMarketError(lineno, f"bad entry {' '.join(tokens)!r}") from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise MatrixMarketError(lineno, f"index ({i}, {j}) outside {rows}x{cols}")
        out[i - 1, j - 1] += value
        count += 1
    if count != nnz:
        raise MatrixMarketError(last_lineno, f"expected {nnz} entries, found {count}")
    return out


def save_matrix(path: str | os.PathLike, a, layout: str = "array") -> None:
    """Write a dense matrix in MatrixMarket form ('array' or 'coordinate')."""
    m = np.atleast_2d(np.asarray(a, dtype=float))
    rows, cols = m.shape
    with open(path, "w", encoding="ascii") as fh:
        if layout == "array":
            fh.write("%%MatrixMarket matrix array real general\n")
            fh.write(f"{rows} {cols}\n")
            for j in range(cols):
                for i in range(rows):
                    fh.write(f"{float(m[i, j])!r}\n")
        elif layout == "coordinate":
            entries = [(i + 1, j + 1, m[i, j]) for j in range(cols) for i in range(rows) if m[i, j] != 0.0]
            fh.write("%%MatrixMarket matrix coordinate real general\n")
            fh.write(f"{rows} {cols} {len(entries)}\n")
            for i, j, value in entries:
                fh.write(f"{i} {j} {float(value)!r}\n")
        else:
            raise ValueError(f"layout must be 'array' or 'coordinate', got {layout!r}")
