from dataclasses import dataclass
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from quiver_rank.errors import DimensionMismatchException, NotIntertwiningException, QuiverMismatchException
from quiver_rank.linalg.field import Field, QQ
from quiver_rank.linalg.matrix import Matrix, block_diag, is_invertible, kronecker, vstack
from quiver_rank.linalg.powers import exterior_power, symmetric_power
from quiver_rank.quiver.quiver import Path, Quiver, opposite
from quiver_rank.quiver.quiver_morphism import QuiverMorphism, Subquiver, validate_morphism

DimensionVector = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Representation:
    """
    A vector space K^dims[x] at every vertex and a dims[head] x dims[tail] matrix at every arrow.
    Every arrow has a matrix, including arrows touching a zero-dimensional vertex.
    """
    quiver: Quiver
    dims: Dict[str, int]
    mats: Dict[str, Matrix]
    field: Field = QQ
    name: str = 'V'

    def __post_init__(self):
        for x in self.quiver.vertices:
            if x not in self.dims or self.dims[x] < 0:
                raise DimensionMismatchException(f'Representation {self.name} needs a dimension at vertex {x}.')
        for a in self.quiver.arrows:
            if a.name not in self.mats:
                raise DimensionMismatchException(f'Representation {self.name} needs a matrix for arrow {a.name}.')
            m = self.mats[a.name]
            expected = (self.dims[a.head], self.dims[a.tail])
            if m.shape != expected:
                raise DimensionMismatchException(f'Arrow {a.name} of {self.name} needs a {expected[0]}x{expected[1]} '
                                                 f'matrix, got {m.shape[0]}x{m.shape[1]}.')
            if m.field != self.field:
                raise DimensionMismatchException(f'Arrow {a.name} of {self.name} has a matrix over {m.field}, '
                                                 f'not {self.field}.')

    def dim(self, x: str) -> int:
        return self.dims[x]

    def mat(self, a: str) -> Matrix:
        return self.mats[a]

    @property
    def dimension_vector(self) -> DimensionVector:
        return tuple(self.dims[x] for x in self.quiver.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def renamed(self, name: str) -> 'Representation':
        return Representation(self.quiver, self.dims, self.mats, self.field, name)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.quiver == other.quiver and self.field == other.field and self.dims == other.dims \
            and self.mats == other.mats

    def __hash__(self):
        return hash((self.quiver, self.field, self.dimension_vector,
                     tuple(self.mats[a] for a in self.quiver.arrow_names)))

    def __repr__(self):
        return f'Representation({self.name} over {self.quiver.name}, dims={self.dimension_vector})'


def representation(q: Quiver, dims: Union[Mapping[str, int], Sequence[int]], mats: Mapping[str, object] = None,
                   field: Field = QQ, name: str = 'V') -> Representation:
    """
    Builds a representation from plain data. dims may be a mapping or a sequence in vertex order;
    each matrix may be a Matrix or a list of rows. A missing matrix defaults to the empty one
    when an endpoint of its arrow is zero-dimensional.
    """
    if not isinstance(dims, Mapping):
        dims = list(dims)
        if len(dims) != len(q.vertices):
            raise DimensionMismatchException(f'Quiver {q.name} has {len(q.vertices)} vertices, got {len(dims)} dimensions.')
        dims = dict(zip(q.vertices, dims))
    else:
        dims = {x: dims.get(x, 0) for x in q.vertices}
    mats = dict(mats or {})
    built = {}
    for a in q.arrows:
        rows, cols = dims[a.head], dims[a.tail]
        if a.name not in mats:
            if rows * cols != 0:
                raise DimensionMismatchException(f'Arrow {a.name} of {name} needs a {rows}x{cols} matrix.')
            built[a.name] = Matrix.zeros(field, rows, cols)
            continue
        given = mats[a.name]
        built[a.name] = given if isinstance(given, Matrix) else Matrix.from_rows(given, field, cols=cols)
    return Representation(q, dims, built, field, name)


def identity_rep(q: Quiver, field: Field = QQ) -> Representation:
    """K at every vertex, the identity on every arrow: the unit for the tensor product."""
    return thin_rep(q, q.vertices, field, name='1')


def zero_rep(q: Quiver, field: Field = QQ) -> Representation:
    return representation(q, {}, {}, field, name='0')


def thin_rep(q: Quiver, support: Iterable[str], field: Field = QQ, name: Optional[str] = None) -> Representation:
    """K on the given vertices, 0 elsewhere, and the identity on every arrow inside the support."""
    support = set(support)
    dims = {x: 1 if x in support else 0 for x in q.vertices}
    mats = {a.name: [[1]] for a in q.arrows if a.tail in support and a.head in support}
    if name is None:
        name = 'T' + ''.join(str(d) for d in (dims[x] for x in q.vertices))
    return representation(q, dims, mats, field, name)


def support(v: Representation) -> List[str]:
    return [x for x in v.quiver.vertices if v.dims[x] > 0]


def _check_same(v: Representation, w: Representation):
    if v.quiver != w.quiver:
        raise QuiverMismatchException(f'{v.name} lives over {v.quiver.name}, {w.name} over {w.quiver.name}.')
    if v.field != w.field:
        raise QuiverMismatchException(f'{v.name} is over {v.field}, {w.name} over {w.field}.')


@dataclass(frozen=True, eq=False)
class RepMorphism:
    """
    A family of matrices comps[x]: source_x -> target_x commuting with every arrow,
    comps[head] . source_a == target_a . comps[tail]. Checked on construction.
    """
    source: Representation
    target: Representation
    comps: Dict[str, Matrix]

    def __post_init__(self):
        _check_same(self.source, self.target)
        for x in self.source.quiver.vertices:
            m = self.comps.get(x)
            expected = (self.target.dims[x], self.source.dims[x])
            if m is None or m.shape != expected:
                raise DimensionMismatchException(f'Component at {x} must be {expected[0]}x{expected[1]}.')
        for a in self.source.quiver.arrows:
            if self.comps[a.head] @ self.source.mats[a.name] != self.target.mats[a.name] @ self.comps[a.tail]:
                raise NotIntertwiningException(f'Components do not commute with arrow {a.name} '
                                               f'({self.source.name} -> {self.target.name}).')

    @property
    def quiver(self) -> Quiver:
        return self.source.quiver

    def comp(self, x: str) -> Matrix:
        return self.comps[x]

    def __matmul__(self, other: 'RepMorphism') -> 'RepMorphism':
        """self after other."""
        if other.target != self.source:
            raise DimensionMismatchException(f'Cannot compose: {other.target.name} is not {self.source.name}.')
        return RepMorphism(other.source, self.target,
                           {x: self.comps[x] @ other.comps[x] for x in self.quiver.vertices})

    def _combine(self, other: 'RepMorphism', op) -> 'RepMorphism':
        if other.source != self.source or other.target != self.target:
            raise DimensionMismatchException('Only morphisms between the same representations can be combined.')
        return RepMorphism(self.source, self.target, {x: op(self.comps[x], other.comps[x]) for x in self.quiver.vertices})

    def __add__(self, other: 'RepMorphism') -> 'RepMorphism':
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: 'RepMorphism') -> 'RepMorphism':
        return self._combine(other, lambda a, b: a - b)

    def scale(self, c) -> 'RepMorphism':
        return RepMorphism(self.source, self.target, {x: m.scale(c) for x, m in self.comps.items()})

    def power(self, n: int) -> 'RepMorphism':
        return RepMorphism(self.source, self.target, {x: m.power(n) for x, m in self.comps.items()})

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.comps.values())

    def is_invertible(self) -> bool:
        return all(is_invertible(m) for m in self.comps.values())

    def __eq__(self, other):
        if not isinstance(other, RepMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.comps == other.comps

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.comps[x] for x in self.quiver.vertices)))

    def __repr__(self):
        return f'RepMorphism({self.source.name} -> {self.target.name})'


def identity_morphism(v: Representation) -> RepMorphism:
    return RepMorphism(v, v, {x: Matrix.identity(v.field, v.dims[x]) for x in v.quiver.vertices})


def zero_morphism(v: Representation, w: Representation) -> RepMorphism:
    return RepMorphism(v, w, {x: Matrix.zeros(v.field, w.dims[x], v.dims[x]) for x in v.quiver.vertices})


def linear_combination(coefficients: Sequence, morphisms: Sequence[RepMorphism],
                       source: Representation, target: Representation) -> RepMorphism:
    result = {x: Matrix.zeros(source.field, target.dims[x], source.dims[x]) for x in source.quiver.vertices}
    for c, f in zip(coefficients, morphisms):
        if c == 0:
            continue
        for x in result:
            result[x] = result[x] + f.comps[x].scale(c)
    return RepMorphism(source, target, result)


@dataclass(frozen=True, eq=False)
class DirectSum:
    """V (+) W with its biproduct structure maps; index 0 refers to V, index 1 to W."""
    total: Representation
    insertions: Tuple[RepMorphism, RepMorphism]
    projections: Tuple[RepMorphism, RepMorphism]


def direct_sum(v: Representation, w: Representation) -> DirectSum:
    _check_same(v, w)
    q, k = v.quiver, v.field
    total = Representation(q, {x: v.dims[x] + w.dims[x] for x in q.vertices},
                           {a: block_diag(v.mats[a], w.mats[a]) for a in q.arrow_names}, k, f'({v.name}+{w.name})')
    insert_v, insert_w, project_v, project_w = {}, {}, {}, {}
    for x in q.vertices:
        dv, dw = v.dims[x], w.dims[x]
        insert_v[x] = vstack(k, dv, [Matrix.identity(k, dv), Matrix.zeros(k, dw, dv)])
        insert_w[x] = vstack(k, dw, [Matrix.zeros(k, dv, dw), Matrix.identity(k, dw)])
        project_v[x] = insert_v[x].T
        project_w[x] = insert_w[x].T
    return DirectSum(total,
                     (RepMorphism(v, total, insert_v), RepMorphism(w, total, insert_w)),
                     (RepMorphism(total, v, project_v), RepMorphism(total, w, project_w)))


def direct_sum_of(q: Quiver, parts: Iterable[Representation], field: Field = QQ) -> Representation:
    total = zero_rep(q, field)
    for part in parts:
        total = direct_sum(total, part).total
    return total


def morphism_direct_sum(f: RepMorphism, g: RepMorphism) -> RepMorphism:
    """f (+) g : source(f) (+) source(g) -> target(f) (+) target(g)."""
    return RepMorphism(direct_sum(f.source, g.source).total, direct_sum(f.target, g.target).total,
                       {x: block_diag(f.comps[x], g.comps[x]) for x in f.quiver.vertices})


def tensor(v: Representation, w: Representation) -> Representation:
    """Pointwise tensor product; bases at each vertex in left-major Kronecker order."""
    _check_same(v, w)
    q = v.quiver
    return Representation(q, {x: v.dims[x] * w.dims[x] for x in q.vertices},
                          {a: kronecker(v.mats[a], w.mats[a]) for a in q.arrow_names}, v.field, f'{v.name}x{w.name}')


def tensor_morphism(f: RepMorphism, g: RepMorphism) -> RepMorphism:
    return RepMorphism(tensor(f.source, g.source), tensor(f.target, g.target),
                       {x: kronecker(f.comps[x], g.comps[x]) for x in f.quiver.vertices})


def dual(v: Representation) -> Representation:
    """The dual representation over the opposite quiver: transposed matrices on reversed arrows."""
    return Representation(opposite(v.quiver), dict(v.dims), {a: m.T for a, m in v.mats.items()}, v.field, f'D{v.name}')


def dual_morphism(f: RepMorphism) -> RepMorphism:
    """D f : D target -> D source."""
    return RepMorphism(dual(f.target), dual(f.source), {x: m.T for x, m in f.comps.items()})


def path_map(v: Representation, p: Path) -> Matrix:
    """V_p = V_{a_n} ... V_{a_1}; the identity for a trivial path."""
    q = v.quiver
    if not q.has_vertex(p.tail) or not q.has_vertex(p.head):
        raise QuiverMismatchException(f'Path {p} does not lie in {q.name}.')
    result = Matrix.identity(v.field, v.dims[p.tail])
    at = p.tail
    for a in p.arrows:
        if not q.has_arrow(a) or q.arrow(a).tail != at:
            raise QuiverMismatchException(f'Path {p} does not lie in {q.name}.')
        result = v.mats[a] @ result
        at = q.arrow(a).head
    return result


def pullback(alpha: QuiverMorphism, v: Representation) -> Representation:
    """alpha* V: V composed with alpha, a representation of alpha.source."""
    validate_morphism(alpha)
    if alpha.target != v.quiver:
        raise QuiverMismatchException(f'{alpha.name} maps into {alpha.target.name}, but {v.name} lives over {v.quiver.name}.')
    return Representation(alpha.source, {x: v.dims[alpha.vertex(x)] for x in alpha.source.vertices},
                          {a: v.mats[alpha.arrow(a)] for a in alpha.source.arrow_names}, v.field,
                          f'{alpha.name}*{v.name}')


def restrict(v: Representation, p: Subquiver) -> Representation:
    return pullback(p.inclusion, v)


def exterior(v: Representation, k: int) -> Representation:
    q = v.quiver
    return Representation(q, {x: comb(v.dims[x], k) for x in q.vertices},
                          {a: exterior_power(v.mats[a], k) for a in q.arrow_names}, v.field, f'L{k}{v.name}')


def symmetric(v: Representation, k: int) -> Representation:
    q = v.quiver
    return Representation(q, {x: 1 if k == 0 else comb(v.dims[x] + k - 1, k) for x in q.vertices},
                          {a: symmetric_power(v.mats[a], k) for a in q.arrow_names}, v.field, f'S{k}{v.name}')
