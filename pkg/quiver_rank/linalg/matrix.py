from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from quiver_rank.errors import DimensionMismatchException, InconsistentSystemException
from quiver_rank.linalg.field import Field, QQ, Scalar


class Matrix:
    """
    Dense matrix over an exact field, stored as a read-only numpy object array.
    Shapes with zero rows or zero columns are ordinary values.
    """

    __slots__ = ('field', '_entries')

    def __init__(self, field: Field, entries: np.ndarray):
        # entries must already be normalized for field; use the classmethods from outside this module
        if entries.ndim != 2:
            raise DimensionMismatchException(f'Matrix entries must be 2-dimensional, got shape {entries.shape}.')
        entries.flags.writeable = False
        self.field = field
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, cols: Optional[int] = None) -> 'Matrix':
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if len(rows) > 0 else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchException(f'Every row must have {cols} entries, got {len(row)}.')
        entries = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                entries[i, j] = field.coerce(value)
        return cls(field, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field = QQ, rows: int = 0) -> 'Matrix':
        if len(columns) == 0:
            return cls.zeros(field, rows, 0)
        return cls.from_rows(columns, field).T

    @classmethod
    def from_array(cls, array: np.ndarray, field: Field = QQ) -> 'Matrix':
        return cls(field, field.normalize(np.array(array, dtype=object)))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> 'Matrix':
        entries = np.empty((rows, cols), dtype=object)
        entries.fill(field.zero)
        return cls(field, entries)

    @classmethod
    def identity(cls, field: Field, n: int) -> 'Matrix':
        entries = np.empty((n, n), dtype=object)
        entries.fill(field.zero)
        for i in range(n):
            entries[i, i] = field.one
        return cls(field, entries)

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._entries.shape

    def entry(self, i: int, j: int) -> Scalar:
        return self._entries[i, j]

    def to_array(self) -> np.ndarray:
        """A writable copy of the entries."""
        return self._entries.copy()

    def tolist(self) -> List[List[Scalar]]:
        return self._entries.tolist()

    def column(self, j: int) -> List[Scalar]:
        return list(self._entries[:, j])

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> 'Matrix':
        return Matrix(self.field, self._entries[np.ix_(np.array(list(row_indices), dtype=int),
                                                      np.array(list(col_indices), dtype=int))].copy())

    def row_block(self, start: int, stop: int) -> 'Matrix':
        return Matrix(self.field, self._entries[start:stop, :].copy())

    def col_block(self, start: int, stop: int) -> 'Matrix':
        return Matrix(self.field, self._entries[:, start:stop].copy())

    @property
    def T(self) -> 'Matrix':
        return Matrix(self.field, self._entries.T.copy())

    def _check_field(self, other: 'Matrix'):
        if other.field != self.field:
            raise DimensionMismatchException(f'Cannot combine matrices over {self.field} and {other.field}.')

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchException(f'Cannot multiply {self.shape} by {other.shape}.')
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        product = np.dot(self._entries, other._entries)
        return Matrix(self.field, self.field.reduce(product))

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchException(f'Cannot add {self.shape} and {other.shape}.')
        return Matrix(self.field, self.field.reduce(self._entries + other._entries))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchException(f'Cannot subtract {other.shape} from {self.shape}.')
        return Matrix(self.field, self.field.reduce(self._entries - other._entries))

    def __neg__(self) -> 'Matrix':
        return self.scale(-1)

    def scale(self, c) -> 'Matrix':
        c = self.field.coerce(c)
        if self.rows * self.cols == 0:
            return self
        return Matrix(self.field, self.field.reduce(self._entries * c))

    def power(self, n: int) -> 'Matrix':
        if not self.is_square():
            raise DimensionMismatchException(f'Only square matrices have powers, got {self.shape}.')
        result = Matrix.identity(self.field, self.rows)
        base = self
        while n > 0:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(value == 0 for value in self._entries.flat)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise DimensionMismatchException(f'Only square matrices have a trace, got {self.shape}.')
        total = self.field.zero
        for i in range(self.rows):
            total = total + self._entries[i, i]
        return self.field.coerce(total)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape \
            and all(a == b for a, b in zip(self._entries.flat, other._entries.flat))

    def __hash__(self):
        return hash((self.field, self.shape, tuple(self._entries.flat)))

    def __repr__(self):
        rows = ', '.join('[' + ', '.join(self.field.format(v) for v in row) + ']' for row in self._entries.tolist())
        return f'[{rows}]' if self.rows > 0 else '[]'


def hstack(field: Field, rows: int, blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    for block in blocks:
        if block.rows != rows:
            raise DimensionMismatchException(f'Cannot place a block with {block.rows} rows next to {rows} rows.')
    if len(blocks) == 0:
        return Matrix.zeros(field, rows, 0)
    return Matrix(field, np.concatenate([b._entries for b in blocks], axis=1))


def vstack(field: Field, cols: int, blocks: Iterable[Matrix]) -> Matrix:
    blocks = list(blocks)
    for block in blocks:
        if block.cols != cols:
            raise DimensionMismatchException(f'Cannot stack a block with {block.cols} columns on {cols} columns.')
    if len(blocks) == 0:
        return Matrix.zeros(field, 0, cols)
    return Matrix(field, np.concatenate([b._entries for b in blocks], axis=0))


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    a._check_field(b)
    entries = np.empty((a.rows + b.rows, a.cols + b.cols), dtype=object)
    entries.fill(a.field.zero)
    entries[:a.rows, :a.cols] = a._entries
    entries[a.rows:, a.cols:] = b._entries
    return Matrix(a.field, entries)


def block_diag_of(field: Field, blocks: Iterable[Matrix]) -> Matrix:
    result = Matrix.zeros(field, 0, 0)
    for block in blocks:
        result = block_diag(result, block)
    return result


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """
    Kronecker product with left-major index order: row (i1, i2) sits at i1 * b.rows + i2.
    """
    a._check_field(b)
    outer = np.multiply.outer(a._entries, b._entries)  # indices (i1, j1, i2, j2)
    entries = outer.transpose(0, 2, 1, 3).reshape(a.rows * b.rows, a.cols * b.cols)
    return Matrix(a.field, a.field.reduce(entries))


def _row_reduce(m: Matrix) -> Tuple[np.ndarray, List[int]]:
    field = m.field
    a = m.to_array()
    rows, cols = a.shape
    pivots = []
    pivot_row = 0
    for j in range(cols):
        if pivot_row == rows:
            break
        nonzero = next((i for i in range(pivot_row, rows) if a[i, j] != 0), None)
        if nonzero is None:
            continue
        if nonzero != pivot_row:
            a[[pivot_row, nonzero]] = a[[nonzero, pivot_row]]
        a[pivot_row] = field.reduce(a[pivot_row] * field.inverse(a[pivot_row, j]))
        for i in range(rows):
            if i != pivot_row and a[i, j] != 0:
                a[i] = field.reduce(a[i] - a[i, j] * a[pivot_row])
        pivots.append(j)
        pivot_row += 1
    return a, pivots


def rref(m: Matrix) -> Matrix:
    """The unique reduced row echelon form of m."""
    reduced, _ = _row_reduce(m)
    return Matrix(m.field, reduced)


def rref_with_pivots(m: Matrix) -> Tuple[Matrix, List[int]]:
    reduced, pivots = _row_reduce(m)
    return Matrix(m.field, reduced), pivots


def rank(m: Matrix) -> int:
    _, pivots = _row_reduce(m)
    return len(pivots)


def null_space_columns(m: Matrix) -> Matrix:
    """
    Basis of {v : m v = 0} as the columns of a matrix, one column per free variable of rref(m),
    in increasing order of the free variable.
    """
    reduced, pivots = _row_reduce(m)
    field = m.field
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = np.empty((m.cols, len(free)), dtype=object)
    basis.fill(field.zero)
    for k, f in enumerate(free):
        basis[f, k] = field.one
        for row, p in enumerate(pivots):
            basis[p, k] = field.coerce(-reduced[row, f])
    return Matrix(field, basis)


def solve(a: Matrix, b: Matrix) -> Matrix:
    """
    The unique X with a X = b, for a of full column rank.
    Raises InconsistentSystemException if b is not in the column span of a.
    """
    a._check_field(b)
    if a.rows != b.rows:
        raise DimensionMismatchException(f'Cannot solve a system with {a.rows} equations and right side {b.shape}.')
    augmented = hstack(a.field, a.rows, [a, b])
    reduced, pivots = _row_reduce(augmented)
    if pivots[:a.cols] != list(range(a.cols)):
        raise DimensionMismatchException('Coefficient matrix does not have full column rank.')
    if len(pivots) > a.cols:
        raise InconsistentSystemException('Right-hand side is not in the column span.')
    return Matrix(a.field, reduced[:a.cols, a.cols:].copy())


def solve_left(a: Matrix, b: Matrix) -> Matrix:
    """The unique X with X a = b, for a of full row rank."""
    return solve(a.T, b.T).T


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise DimensionMismatchException(f'Only square matrices can be inverted, got {m.shape}.')
    return solve(m, Matrix.identity(m.field, m.rows))


def is_invertible(m: Matrix) -> bool:
    return m.is_square() and rank(m) == m.rows


def left_inverse(m: Matrix) -> Matrix:
    """
    Some L with L m = id, for m of full column rank: invert a maximal set of independent rows
    and put zeros in the remaining columns.
    """
    _, independent_rows = _row_reduce(m.T)
    if len(independent_rows) != m.cols:
        raise DimensionMismatchException('Matrix does not have full column rank.')
    square_inverse = inverse(m.submatrix(independent_rows, range(m.cols)))
    entries = np.empty((m.cols, m.rows), dtype=object)
    entries.fill(m.field.zero)
    for k, row in enumerate(independent_rows):
        entries[:, row] = square_inverse._entries[:, k]
    return Matrix(m.field, entries)


def determinant(m: Matrix) -> Scalar:
    if not m.is_square():
        raise DimensionMismatchException(f'Only square matrices have a determinant, got {m.shape}.')
    field = m.field
    a = m.to_array()
    n = m.rows
    det = field.one
    for j in range(n):
        nonzero = next((i for i in range(j, n) if a[i, j] != 0), None)
        if nonzero is None:
            return field.zero
        if nonzero != j:
            a[[j, nonzero]] = a[[nonzero, j]]
            det = -det
        det = field.coerce(det * a[j, j])
        pivot_inverse = field.inverse(a[j, j])
        for i in range(j + 1, n):
            if a[i, j] != 0:
                a[i] = field.reduce(a[i] - (a[i, j] * pivot_inverse) * a[j])
    return field.coerce(det)
