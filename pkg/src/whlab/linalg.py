"""Dense exact linear algebra over QQ or GF(p).

Matrices are immutable row-major tuples.  Row reduction over a prime
field runs on int64 numpy arrays (exact modular arithmetic); over the
rationals it runs on Fraction rows.  Both produce the reduced row
echelon form with a deterministic pivot choice (first nonzero entry in
column order), so kernel bases and representatives are reproducible.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import FieldMismatch
from .fields import Field, same_field


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: Sequence[Sequence]):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", tuple(tuple(field.of(x) for x in r) for r in data))

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls._raw(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def _raw(cls, field, rows, cols, data) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "data", data)
        return m

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.field, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols} over {self.field}: {body})"

    def __add__(self, other):
        same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        f = self.field
        return Matrix._raw(
            f, self.rows, self.cols,
            tuple(tuple(f.add(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)),
        )

    def __sub__(self, other):
        return self + other.scale(self.field.of(-1))

    def scale(self, c):
        f = self.field
        return Matrix._raw(f, self.rows, self.cols,
                           tuple(tuple(f.mul(c, x) for x in r) for r in self.data))

    def __matmul__(self, other):
        same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        if f.char != 0:
            a = _to_np(self)
            b = _to_np(other)
            return _from_np(f, (a @ b) % f.char)
        bt = list(zip(*other.data))
        out = []
        for r in self.data:
            out.append(tuple(sum(x * y for x, y in zip(r, c)) for c in bt))
        return Matrix._raw(f, self.rows, other.cols, tuple(out))

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, self.cols, self.rows, tuple(zip(*self.data))) \
            if self.rows else Matrix.zero(self.field, self.cols, 0)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product (v as a column)."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        out = []
        for r in self.data:
            acc = f.zero
            for a, x in zip(r, v):
                if not f.is_zero(a) and not f.is_zero(x):
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for r in self.data for x in r)

    def vstack(self, other: "Matrix") -> "Matrix":
        same_field(self.field, other.field)
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix._raw(self.field, self.rows + other.rows, self.cols, self.data + other.data)


def _to_np(m: Matrix) -> np.ndarray:
    return np.array([[int(x) for x in r] for r in m.data], dtype=np.int64).reshape(m.rows, m.cols)


def _from_np(field: Field, a: np.ndarray) -> Matrix:
    return Matrix._raw(field, a.shape[0], a.shape[1],
                       tuple(tuple(int(x) for x in row) for row in a))


class RowReduction(NamedTuple):
    rank: int
    rref: Matrix
    pivots: tuple
    kernel: tuple  # tuple of kernel basis vectors (tuples), deterministic


def _rref_mod_p(a: np.ndarray, p: int):
    a = a % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sub = a[r:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _rref_fractions(rows, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        row_r = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], row_r)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in rows[:r]], pivots


def _kernel_from_rref(field: Field, rref_rows, pivots, ncols):
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    kernel = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(rref_rows[i][fc]) if i < len(rref_rows) else field.zero
        kernel.append(tuple(v))
    return tuple(kernel)


def row_reduce(m: Matrix) -> RowReduction:
    """RREF, rank and a deterministic kernel basis; all exact."""
    f = m.field
    if f.char != 0:
        arr, pivots = _rref_mod_p(_to_np(m) if m.rows else np.zeros((0, m.cols), dtype=np.int64), f.char)
        rref_rows = [tuple(int(x) for x in row) for row in arr]
    else:
        rref_rows, pivots = _rref_fractions(m.data, m.cols)
    kernel = _kernel_from_rref(f, rref_rows, pivots, m.cols)
    rref = Matrix._raw(f, len(rref_rows), m.cols, tuple(rref_rows))
    return RowReduction(len(pivots), rref, tuple(pivots), kernel)


def rank_of_vectors(field: Field, vectors, ncols: int) -> int:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return 0
    return row_reduce(Matrix(field, vectors)).rank


def solve(m: Matrix, b: Sequence):
    """One solution x of m·x = b (free variables zero), or None."""
    f = m.field
    aug = Matrix._raw(f, m.rows, m.cols + 1,
                      tuple(r + (f.of(x),) for r, x in zip(m.data, b)))
    red = row_reduce(aug)
    x = [f.zero] * m.cols
    for row, pc in zip(red.rref.data, red.pivots):
        if pc == m.cols:
            return None  # inconsistent
        x[pc] = row[m.cols]
    return tuple(x)


class EchelonSpace:
    """Mutable echelon basis of a subspace of k^n; small-scale, generic."""

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[tuple] = []
        self.pivot_of_row: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v):
        f = self.field
        v = [f.of(x) for x in v]
        for row, p in zip(self.rows, self.pivot_of_row):
            if not f.is_zero(v[p]):
                c = v[p]
                v = [a - c * b if f.char == 0 else (a - c * b) % f.char
                     for a, b in zip(v, row)]
        return v

    def reduce(self, v) -> tuple:
        """Residue of v modulo the span, as a tuple."""
        return tuple(self._reduce(v))

    def contains(self, v) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self._reduce(v))

    def add(self, v) -> bool:
        """Insert v; returns True if the dimension grew."""
        f = self.field
        v = self._reduce(v)
        p = next((i for i, x in enumerate(v) if not f.is_zero(x)), None)
        if p is None:
            return False
        c = f.inv(v[p])
        v = tuple(f.mul(c, x) for x in v)
        at = next((i for i, q in enumerate(self.pivot_of_row) if q > p), len(self.rows))
        self.rows.insert(at, v)
        self.pivot_of_row.insert(at, p)
        return True

    def basis_matrix(self) -> Matrix:
        if not self.rows:
            return Matrix.zero(self.field, 0, self.ncols)
        return Matrix._raw(self.field, len(self.rows), self.ncols, tuple(self.rows))


class RowSpace:
    """Row space with batch insertion; numpy-backed over GF(p).

    Keeps a full RREF so that `reduce` is a single matrix product over
    GF(p); used for ideal saturation where thousands of rows arrive in
    waves.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        if field.char != 0:
            self._np = np.zeros((0, ncols), dtype=np.int64)
            self._pivots: list[int] = []
        else:
            self._ech = EchelonSpace(field, ncols)

    @property
    def dim(self) -> int:
        return len(self._pivots) if self.field.char != 0 else self._ech.dim

    @property
    def pivots(self) -> list[int]:
        if self.field.char != 0:
            return list(self._pivots)
        return list(self._ech.pivot_of_row)

    def rows(self):
        if self.field.char != 0:
            return [tuple(int(x) for x in r) for r in self._np]
        return [tuple(r) for r in self._ech.rows]

    def add_rows(self, rows) -> int:
        """Insert a batch of vectors; returns the rank increase."""
        if self.field.char == 0:
            before = self._ech.dim
            for r in rows:
                self._ech.add(r)
            return self._ech.dim - before
        p = self.field.char
        cand = np.array([[int(x) for x in r] for r in rows], dtype=np.int64) % p
        if cand.size == 0:
            return 0
        cand = self._np_reduce(cand)
        red, piv = _rref_mod_p(cand, p)
        if not piv:
            return 0
        # knock the new pivots out of the old rows, then merge sorted by pivot
        if self._np.shape[0]:
            coeff = self._np[:, piv] % p
            if coeff.any():
                self._np = (self._np - coeff @ red) % p
        merged = list(zip(self._pivots, self._np)) + list(zip(piv, red))
        merged.sort(key=lambda t: t[0])
        self._pivots = [t[0] for t in merged]
        self._np = np.array([t[1] for t in merged], dtype=np.int64) if merged \
            else np.zeros((0, self.ncols), dtype=np.int64)
        return len(piv)

    def _np_reduce(self, arr: np.ndarray) -> np.ndarray:
        p = self.field.char
        if self._np.shape[0] == 0:
            return arr % p
        coeff = arr[:, self._pivots] % p
        return (arr - coeff @ self._np) % p

    def reduce(self, v):
        """Residue of v modulo this row space."""
        if self.field.char == 0:
            return tuple(self._ech._reduce(v))
        arr = np.array([[int(x) for x in v]], dtype=np.int64)
        return tuple(int(x) for x in self._np_reduce(arr)[0])

    def contains(self, v) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.reduce(v))
