from quiver_rank.errors import DimensionMismatchException
from quiver_rank.linalg.field import Field
from quiver_rank.linalg.matrix import Matrix, hstack, null_space_columns, rref_with_pivots, solve


class Subspace:
    """
    A subspace of K^ambient_dim. The basis is kept in reduced column echelon form, so two
    Subspace values describe the same subspace exactly when their bases are entry-identical.
    """

    __slots__ = ('ambient_dim', 'basis')

    def __init__(self, ambient_dim: int, basis: Matrix):
        # basis must already be canonical; build through spanned_by() from outside this module
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def spanned_by(cls, generators: Matrix) -> 'Subspace':
        reduced, pivots = rref_with_pivots(generators.T)
        return cls(generators.rows, reduced.row_block(0, len(pivots)).T)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(ambient_dim, Matrix.zeros(field, ambient_dim, 0))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> 'Subspace':
        return cls(ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.cols

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, vectors: Matrix) -> bool:
        """Whether every column of vectors lies in this subspace."""
        if vectors.rows != self.ambient_dim:
            raise DimensionMismatchException(f'Vectors of length {vectors.rows} do not live in K^{self.ambient_dim}.')
        return sum_of(self, Subspace.spanned_by(vectors)).dim == self.dim

    def coordinates(self, vectors: Matrix) -> Matrix:
        """The coefficients expressing each column of vectors in this basis."""
        return solve(self.basis, vectors)

    def annihilator(self) -> Matrix:
        """A matrix of full row rank whose kernel is exactly this subspace."""
        return null_space_columns(self.basis.T).T

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __le__(self, other: 'Subspace') -> bool:
        return other.contains(self.basis)

    def __repr__(self):
        return f'Subspace(dim={self.dim} in K^{self.ambient_dim}, basis={self.basis})'


def _check_ambient(s: Subspace, t: Subspace):
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatchException(f'Subspaces of K^{s.ambient_dim} and K^{t.ambient_dim} cannot be compared.')


def image(m: Matrix) -> Subspace:
    return Subspace.spanned_by(m)


def kernel(m: Matrix) -> Subspace:
    return Subspace.spanned_by(null_space_columns(m))


def intersect(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    # x in s ∩ t  <=>  x = S u = T w, so (u, w) lies in the kernel of [S | -T]
    relations = null_space_columns(hstack(s.field, s.ambient_dim, [s.basis, -t.basis]))
    return Subspace.spanned_by(s.basis @ relations.row_block(0, s.dim))


def sum_of(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    return Subspace.spanned_by(hstack(s.field, s.ambient_dim, [s.basis, t.basis]))


def preimage(m: Matrix, s: Subspace) -> Subspace:
    """{v : m v in s}."""
    if s.ambient_dim != m.rows:
        raise DimensionMismatchException(f'Cannot pull back a subspace of K^{s.ambient_dim} along a map into K^{m.rows}.')
    return kernel(s.annihilator() @ m)


def push_forward(m: Matrix, s: Subspace) -> Subspace:
    """The image m(s)."""
    if s.ambient_dim != m.cols:
        raise DimensionMismatchException(f'Cannot push a subspace of K^{s.ambient_dim} along a map from K^{m.cols}.')
    return image(m @ s.basis)
