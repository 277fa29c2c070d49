"""Dense linear algebra over Q(q) on the eight-dimensional core module.

Matrices follow the column-as-image convention: entry ``(i, j)`` is the
coefficient of basis element ``i`` in the image of basis element ``j``.
"""

from __future__ import annotations

import enum
import json
from typing import Iterable, Iterator, Mapping, Sequence

from .ring import ONE, ZERO, Scalar, as_scalar

__all__ = ["Basis", "CoreVector", "CoreMatrix", "SingularMatrixError", "DIM"]

DIM = 8


class Basis(enum.IntEnum):
    """Core generators, in their fixed order."""

    T1 = 0
    Tm1 = 1
    Tp = 2
    Tm = 3
    TB = 4
    S2 = 5
    Sm2 = 6
    S2Sm2 = 7


class SingularMatrixError(ArithmeticError):
    pass


def _scalars(values: Iterable) -> tuple[Scalar, ...]:
    return tuple(as_scalar(v) for v in values)


class CoreVector:
    __slots__ = ("entries",)

    def __init__(self, entries: Sequence):
        entries = _scalars(entries)
        if len(entries) != DIM:
            raise ValueError(f"core vectors have {DIM} entries, got {len(entries)}")
        self.entries = entries

    @classmethod
    def basis(cls, b: Basis) -> CoreVector:
        return cls([ONE if i == b else ZERO for i in range(DIM)])

    @classmethod
    def zero(cls) -> CoreVector:
        return cls([ZERO] * DIM)

    def __getitem__(self, b: Basis | int) -> Scalar:
        return self.entries[b]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, CoreVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: CoreVector) -> CoreVector:
        return CoreVector([a + b for a, b in zip(self.entries, other.entries)])

    def __rmul__(self, k) -> CoreVector:
        k = as_scalar(k)
        return CoreVector([k * a for a in self.entries])

    def __repr__(self):
        return f"CoreVector({[str(e) for e in self.entries]})"


class CoreMatrix:
    """Immutable 8x8 matrix of Scalars, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(_scalars(r) for r in rows)
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError(f"core matrices are {DIM}x{DIM}")
        self.rows = rows

    @classmethod
    def identity(cls) -> CoreMatrix:
        return cls([[ONE if i == j else ZERO for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def diagonal(cls, diag: Sequence) -> CoreMatrix:
        diag = _scalars(diag)
        return cls([[diag[i] if i == j else ZERO for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def from_images(cls, images: Mapping[Basis, Mapping[Basis, object]]) -> CoreMatrix:
        """Build from ``{source: {target: coefficient}}``; omitted sources map to 0."""
        rows = [[ZERO] * DIM for _ in range(DIM)]
        for src, image in images.items():
            for tgt, coeff in image.items():
                rows[tgt][src] = as_scalar(coeff)
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: Basis | int) -> CoreVector:
        return CoreVector([r[j] for r in self.rows])

    def transpose(self) -> CoreMatrix:
        return CoreMatrix(list(zip(*self.rows)))

    def replace(self, i: int, j: int, value) -> CoreMatrix:
        rows = [list(r) for r in self.rows]
        rows[i][j] = as_scalar(value)
        return CoreMatrix(rows)

    def entries(self) -> Iterator[tuple[int, int, Scalar]]:
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                yield i, j, x

    def __eq__(self, other):
        if not isinstance(other, CoreMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def first_difference(self, other: CoreMatrix) -> tuple[int, int, Scalar, Scalar] | None:
        for (i, j, a), (_, _, b) in zip(self.entries(), other.entries()):
            if a != b:
                return i, j, a, b
        return None

    def __add__(self, other: CoreMatrix) -> CoreMatrix:
        return CoreMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: CoreMatrix) -> CoreMatrix:
        return CoreMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __rmul__(self, k) -> CoreMatrix:
        k = as_scalar(k)
        return CoreMatrix([[k * a for a in r] for r in self.rows])

    def apply(self, v: CoreVector) -> CoreVector:
        return CoreVector([_dot(r, v.entries) for r in self.rows])

    def __matmul__(self, other):
        """Composition ``self o other`` (``other`` acts first), or application to a vector."""
        if isinstance(other, CoreVector):
            return self.apply(other)
        if not isinstance(other, CoreMatrix):
            return NotImplemented
        cols = list(zip(*other.rows))
        return CoreMatrix([[_dot(r, c) for c in cols] for r in self.rows])

    def __pow__(self, n: int) -> CoreMatrix:
        if n < 0:
            raise ValueError("negative matrix power; invert explicitly")
        result, base = CoreMatrix.identity(), self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def commutes_with(self, other: CoreMatrix) -> bool:
        return self @ other == other @ self

    def inverse(self) -> CoreMatrix:
        """Gauss-Jordan elimination over Q(q); pivot is the first nonzero entry down the column."""
        a = [list(r) + [ONE if i == j else ZERO for j in range(DIM)] for i, r in enumerate(self.rows)]
        for col in range(DIM):
            piv = next((i for i in range(col, DIM) if not a[i][col].is_zero()), None)
            if piv is None:
                raise SingularMatrixError(f"no nonzero pivot in column {Basis(col).name}")
            a[col], a[piv] = a[piv], a[col]
            inv_p = a[col][col].inv()
            a[col] = [inv_p * x for x in a[col]]
            for i in range(DIM):
                if i != col and not a[i][col].is_zero():
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
        return CoreMatrix([r[DIM:] for r in a])

    def det(self) -> Scalar:
        a = [list(r) for r in self.rows]
        det = ONE
        for col in range(DIM):
            piv = next((i for i in range(col, DIM) if not a[i][col].is_zero()), None)
            if piv is None:
                return ZERO
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv_p = p.inv()
            for i in range(col + 1, DIM):
                if not a[i][col].is_zero():
                    f = a[i][col] * inv_p
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
        return det

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps(
                {
                    "basis": [b.name for b in Basis],
                    "convention": "column j is the image of basis element j",
                    "rows": [[x.to_json() for x in r] for r in self.rows],
                },
                separators=(",", ":"),
            )
        if fmt == "latex":
            body = " \\\\\n".join(" & ".join(x.render("latex") for x in r) for r in self.rows)
            return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
        if fmt == "text":
            cells = [[x.render("text") for x in r] for r in self.rows]
            widths = [max(len(cells[i][j]) for i in range(DIM)) for j in range(DIM)]
            lines = []
            for b, r in zip(Basis, cells):
                lines.append(f"{b.name:>5} | " + "  ".join(c.rjust(w) for c, w in zip(r, widths)))
            return "\n".join(lines)
        raise ValueError(f"unknown format {fmt!r}")

    def __repr__(self):
        return "CoreMatrix(\n" + self.render("text") + "\n)"


def _dot(row: Sequence[Scalar], col: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for a, b in zip(row, col):
        if a.is_zero() or b.is_zero():
            continue
        acc = acc + a * b
    return acc
