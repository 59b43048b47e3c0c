"""Exact linear algebra over the rationals.

Dense matrices with Fraction entries, eliminated fraction-free over the
integers (per-row denominator clearing, then integer row combinations with
content stripping).  No floating point is used anywhere; every rank, kernel
and membership answer is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


class QMatrix:
    """Dense rational matrix, entries stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(
                "expected %d entries, got %d" % (rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rowlists) -> "QMatrix":
        rowlists = [list(r) for r in rowlists]
        nrows = len(rowlists)
        ncols = len(rowlists[0]) if rowlists else 0
        flat = []
        for r in rowlists:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nrows, ncols, flat)

    @classmethod
    def from_columns(cls, collists) -> "QMatrix":
        collists = [list(c) for c in collists]
        ncols = len(collists)
        nrows = len(collists[0]) if collists else 0
        flat = []
        for i in range(nrows):
            for c in collists:
                if len(c) != nrows:
                    raise ValueError("ragged columns")
                flat.append(c[i])
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def row_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        flat = []
        for j in range(self.cols):
            for i in range(self.rows):
                flat.append(self.entries[i * self.cols + j])
        return QMatrix(self.cols, self.rows, flat)

    def augment_column(self, col) -> "QMatrix":
        col = list(col)
        if len(col) != self.rows:
            raise ValueError("column length mismatch")
        flat = []
        for i in range(self.rows):
            flat.extend(self.row(i))
            flat.append(col[i])
        return QMatrix(self.rows, self.cols + 1, flat)

    def mul_vector(self, vec) -> list:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = Fraction(0)
            for j, v in enumerate(vec):
                if v:
                    e = self.entries[base + j]
                    if e:
                        acc += e * v
            out.append(acc)
        return out

    def __eq__(self, other):
        return (isinstance(other, QMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return "QMatrix(%d, %d)" % (self.rows, self.cols)


def _integer_rows(m: QMatrix) -> list:
    """Rows of m scaled to integers (row scaling preserves rank and kernel)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        den = 1
        for v in row:
            d = v.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        if den == 1:
            out.append([int(v) for v in row])
        else:
            out.append([int(v * den) for v in row])
    return out


def _row_content(row) -> int:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _echelon(rows, ncols):
    """In-place fraction-free row echelon form on integer rows.

    Pivot choice: in the current column, the nonzero entry of smallest
    bit-size wins; ties go to the lowest row index.  Each updated row is
    divided by its integer content, which keeps entry growth in check
    without ever leaving exact integer arithmetic.

    Returns (rank, pivot_cols).
    """
    nrows = len(rows)
    rank = 0
    pivot_cols = []
    for c in range(ncols):
        if rank == nrows:
            break
        best = -1
        best_bits = -1
        for i in range(rank, nrows):
            a = rows[i][c]
            if a:
                bits = a.bit_length() if a > 0 else (-a).bit_length()
                if best < 0 or bits < best_bits:
                    best, best_bits = i, bits
        if best < 0:
            continue
        if best != rank:
            rows[rank], rows[best] = rows[best], rows[rank]
        rp = rows[rank]
        piv = rp[c]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            f = ri[c]
            if not f:
                continue
            g = gcd(piv, f)
            a, b = piv // g, f // g
            new = [a * x - b * y for x, y in zip(ri, rp)]
            ct = _row_content(new)
            if ct > 1:
                new = [x // ct for x in new]
            rows[i] = new
        pivot_cols.append(c)
        rank += 1
    return rank, pivot_cols


def rank(m: QMatrix) -> int:
    """Rank of m, exact."""
    rows = _integer_rows(m)
    r, _ = _echelon(rows, m.cols)
    return r


def kernel_basis(m: QMatrix) -> list:
    """Basis of the right kernel {v : m v = 0} as lists of Fractions.

    One basis vector per free column: the vector carries 1 in its free
    column, 0 in the other free columns, and back-substituted values in the
    pivot columns.  The result is deterministic for a given matrix.
    """
    rows = _integer_rows(m)
    rank_, pivot_cols = _echelon(rows, m.cols)
    pivset = set(pivot_cols)
    free_cols = [j for j in range(m.cols) if j not in pivset]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        # echelon rows are triangular on the pivot columns; solve upwards
        for r in range(rank_ - 1, -1, -1):
            row = rows[r]
            pc = pivot_cols[r]
            acc = Fraction(0)
            for j in range(pc + 1, m.cols):
                coef = row[j]
                if coef and v[j]:
                    acc += coef * v[j]
            v[pc] = -acc / row[pc] if acc else Fraction(0)
        basis.append(v)
    return basis


def in_span(v, m: QMatrix) -> bool:
    """Whether vector v lies in the column span of m."""
    v = list(v)
    if len(v) != m.rows:
        raise ValueError("vector length %d does not match %d rows" % (len(v), m.rows))
    base = rank(m)
    return rank(m.augment_column(v)) == base


def solve(m: QMatrix, v) -> list | None:
    """One solution x of m x = v, or None when v is outside the column span."""
    v = list(v)
    if len(v) != m.rows:
        raise ValueError("vector length mismatch")
    aug = m.augment_column([-w for w in v])
    for vec in kernel_basis(aug):
        t = vec[m.cols]
        if t:
            return [w / t for w in vec[:m.cols]]
    return None
