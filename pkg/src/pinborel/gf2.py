"""Exact linear algebra over the two-element field.

Vectors are Python ints used as bitsets: bit ``i`` holds coordinate ``i``.
Matrices store their columns as bitsets over the rows, so ``M @ x`` is the
XOR of the columns selected by ``x``.  Every basis returned here is in
reduced echelon form with pivots at the lowest set bit, which makes all
downstream choices reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when matrix or vector shapes do not fit together."""


def lowbit(v: int) -> int:
    return (v & -v).bit_length() - 1


def bits_to_list(v: int, n: int) -> list[int]:
    return [(v >> i) & 1 for i in range(n)]


def list_to_bits(entries: Iterable[int]) -> int:
    v = 0
    for i, e in enumerate(entries):
        if e & 1:
            v |= 1 << i
    return v


def set_bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


class Echelon:
    """Incremental echelon basis with optional tags recording combinations.

    Each stored vector has a distinct pivot (its lowest set bit).  ``tag``
    bitsets ride along through every XOR, which is how kernels, solutions and
    homology coordinates are tracked.
    """

    __slots__ = ("_piv",)

    def __init__(self) -> None:
        self._piv: dict[int, tuple[int, int]] = {}

    def __len__(self) -> int:
        return len(self._piv)

    def reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        residual = 0
        piv = self._piv
        while v:
            low = v & -v
            p = low.bit_length() - 1
            hit = piv.get(p)
            if hit is None:
                residual |= low
                v ^= low
            else:
                v ^= hit[0]
                tag ^= hit[1]
        return residual, tag

    def add(self, v: int, tag: int = 0) -> bool:
        """Insert ``v``; returns False when it was already in the span."""
        r, t = self.reduce(v, tag)
        if not r:
            return False
        self._piv[lowbit(r)] = (r, t)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    def pivots(self) -> list[int]:
        return sorted(self._piv)

    def basis(self) -> list[int]:
        """Reduced echelon basis, ordered by pivot."""
        return [v for v, _ in self.reduced_pairs()]

    def reduced_pairs(self) -> list[tuple[int, int]]:
        keys = sorted(self._piv, reverse=True)
        done: dict[int, tuple[int, int]] = {}
        for p in keys:
            v, t = self._piv[p]
            rest = v ^ (1 << p)
            while rest:
                low = rest & -rest
                q = low.bit_length() - 1
                rest ^= low
                if q in done:
                    v ^= done[q][0]
                    t ^= done[q][1]
            done[p] = (v, t)
        return [done[p] for p in sorted(done)]


def reduced_basis(vectors: Iterable[int]) -> list[int]:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.basis()


@dataclass(frozen=True)
class Gf2Matrix:
    """A ``rows x cols`` matrix over F2, stored column-wise as bitsets."""

    rows: int
    cols: int
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.columns) != self.cols:
            raise DimensionError(f"expected {self.cols} columns, got {len(self.columns)}")
        limit = 1 << self.rows
        for c in self.columns:
            if c < 0 or c >= limit:
                raise DimensionError("column entry outside the row range")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, (0,) * cols)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[int]) -> "Gf2Matrix":
        return cls(rows, len(columns), tuple(columns))

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "Gf2Matrix":
        nrows = len(data)
        if cols is None:
            cols = len(data[0]) if nrows else 0
        columns = [0] * cols
        for i, row in enumerate(data):
            if len(row) != cols:
                raise DimensionError("ragged row data")
            for j, e in enumerate(row):
                if e & 1:
                    columns[j] |= 1 << i
        return cls(nrows, cols, tuple(columns))

    def to_rows(self) -> list[list[int]]:
        return [[(c >> i) & 1 for c in self.columns] for i in range(self.rows)]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return (self.columns[j] >> i) & 1

    def apply(self, x: int) -> int:
        if x >> self.cols:
            raise DimensionError("vector longer than the column count")
        out = 0
        cols = self.columns
        while x:
            low = x & -x
            out ^= cols[low.bit_length() - 1]
            x ^= low
        return out

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        return Gf2Matrix(self.rows, other.cols, tuple(self.apply(c) for c in other.columns))

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return Gf2Matrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.columns, other.columns)))

    def transpose(self) -> "Gf2Matrix":
        columns = [0] * self.rows
        for j, c in enumerate(self.columns):
            for i in set_bits(c):
                columns[i] |= 1 << j
        return Gf2Matrix(self.cols, self.rows, tuple(columns))

    def is_zero(self) -> bool:
        return not any(self.columns)

    @property
    def rank(self) -> int:
        return rank(self)


def rank(m: Gf2Matrix) -> int:
    e = Echelon()
    for c in m.columns:
        e.add(c)
    return len(e)


def _column_echelon(m: Gf2Matrix) -> tuple[Echelon, list[int]]:
    e = Echelon()
    kernel = []
    for j, c in enumerate(m.columns):
        r, t = e.reduce(c, 1 << j)
        if r:
            e._piv[lowbit(r)] = (r, t)
        else:
            kernel.append(t)
    return e, kernel


def kernel_basis(m: Gf2Matrix) -> list[int]:
    """Reduced echelon basis of ``{x : M x = 0}`` (vectors over the columns)."""
    _, kernel = _column_echelon(m)
    return reduced_basis(kernel)


def image_basis(m: Gf2Matrix) -> list[int]:
    """Reduced echelon basis of the column space (vectors over the rows)."""
    return reduced_basis(m.columns)


def solve(m: Gf2Matrix, b: int) -> int | None:
    """Lexicographically least ``x`` with ``M x = b``, or None.

    Lexicographic order reads coordinate 0 first, so the answer minimises
    ``x[0]``, then ``x[1]``, and so on.
    """
    if b >> m.rows:
        raise DimensionError("right-hand side longer than the row count")
    e, kernel = _column_echelon(m)
    r, x = e.reduce(b)
    if r:
        return None
    for k in reduced_basis(kernel):
        if (x >> lowbit(k)) & 1:
            x ^= k
    return x


def preimage_space(m: Gf2Matrix, w: Sequence[int]) -> list[int]:
    """Reduced basis of ``{x : M x in span(w)}``."""
    for v in w:
        if v >> m.rows:
            raise DimensionError("subspace vector longer than the row count")
    extended = Gf2Matrix(m.rows, m.cols + len(w), tuple(m.columns) + tuple(w))
    mask = (1 << m.cols) - 1
    return reduced_basis(k & mask for k in kernel_basis(extended))


def restrict(m: Gf2Matrix, basis: Sequence[int]) -> Gf2Matrix:
    """The matrix of ``M`` on the subspace with the given basis."""
    return Gf2Matrix(m.rows, len(basis), tuple(m.apply(v) for v in basis))


def stack(mats: Sequence[Gf2Matrix], cols: int) -> Gf2Matrix:
    """Vertical concatenation: kernel of the result is the common kernel."""
    rows = 0
    columns = [0] * cols
    for mat in mats:
        if mat.cols != cols:
            raise DimensionError("stacked matrices need equal column counts")
        for j, c in enumerate(mat.columns):
            columns[j] |= c << rows
        rows += mat.rows
    return Gf2Matrix(rows, cols, tuple(columns))


class Subquotient:
    """Homology-style quotient ``Z / B`` with chosen representatives.

    ``reps`` lift a basis of the quotient; ``coords`` expresses any vector of
    ``Z`` in that basis.
    """

    def __init__(self, cycles: Sequence[int], boundaries: Sequence[int]):
        self._e = Echelon()
        for b in boundaries:
            self._e.add(b)
        self.reps: list[int] = []
        for z in cycles:
            r, _ = self._e.reduce(z)
            if r:
                self._e._piv[lowbit(r)] = (r, 1 << len(self.reps))
                self.reps.append(r)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v: int) -> int:
        r, t = self._e.reduce(v)
        if r:
            raise ValueError("vector is not a cycle of this subquotient")
        return t
