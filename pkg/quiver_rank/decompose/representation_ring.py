from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence

from quiver_rank.decompose.class_registry import ClassRegistry, IndecClass, RankDescriptor
from quiver_rank.errors import QuiverMismatchException
from quiver_rank.linalg.matrix import Matrix, determinant, null_space_columns, rank
from quiver_rank.quiver.quiver_morphism import Subquiver
from quiver_rank.rep.representation import Representation, exterior, identity_rep


class RingElement:
    """
    An element of the representation ring: an integer combination of indecomposable classes
    of one registry. Zero coefficients are never stored.
    """

    __slots__ = ('registry', 'coeffs')

    def __init__(self, registry: ClassRegistry, coeffs: Dict[int, int] = None):
        self.registry = registry
        self.coeffs = {i: c for i, c in (coeffs or {}).items() if c != 0}

    @property
    def quiver(self):
        return self.registry.quiver

    def _check(self, other: 'RingElement'):
        if other.registry is not self.registry:
            raise QuiverMismatchException('Ring elements come from different class registries.')

    def __add__(self, other: 'RingElement') -> 'RingElement':
        return ring_add(self, other)

    def __sub__(self, other: 'RingElement') -> 'RingElement':
        return ring_sub(self, other)

    def __neg__(self) -> 'RingElement':
        return ring_neg(self)

    def __mul__(self, other) -> 'RingElement':
        if isinstance(other, int):
            return RingElement(self.registry, {i: c * other for i, c in self.coeffs.items()})
        return ring_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'RingElement':
        return ring_power(self, n)

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.registry is other.registry and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        if self.is_zero():
            return '0'
        terms = []
        for c in sorted((self.registry.get(i) for i in self.coeffs), key=lambda k: k.sort_key):
            coefficient = self.coeffs[c.id]
            sign = '-' if coefficient < 0 else '+'
            magnitude = '' if abs(coefficient) == 1 else str(abs(coefficient))
            terms.append(f'{sign} {magnitude}{c}')
        text = ' '.join(terms)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]


def ring_from(registry: ClassRegistry, v: Representation) -> RingElement:
    return RingElement(registry, dict(Counter(c.id for c in registry.decompose(v))))


def ring_from_class(registry: ClassRegistry, c: IndecClass) -> RingElement:
    return RingElement(registry, {c.id: 1})


def ring_one(registry: ClassRegistry) -> RingElement:
    return ring_from(registry, identity_rep(registry.quiver, registry.field))


def ring_zero(registry: ClassRegistry) -> RingElement:
    return RingElement(registry, {})


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    a._check(b)
    total = dict(a.coeffs)
    for i, c in b.coeffs.items():
        total[i] = total.get(i, 0) + c
    return RingElement(a.registry, total)


def ring_neg(a: RingElement) -> RingElement:
    return RingElement(a.registry, {i: -c for i, c in a.coeffs.items()})


def ring_sub(a: RingElement, b: RingElement) -> RingElement:
    return ring_add(a, ring_neg(b))


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Bilinear extension of [V][W] = [V (x) W], one tensor decomposition per pair of classes."""
    a._check(b)
    total: Dict[int, int] = {}
    for i, c in a.coeffs.items():
        for j, d in b.coeffs.items():
            for k, multiplicity in a.registry.product(i, j).items():
                total[k] = total.get(k, 0) + c * d * multiplicity
    return RingElement(a.registry, total)


def ring_power(a: RingElement, n: int) -> RingElement:
    if n < 0:
        raise ValueError(f'Only nonnegative powers exist in the representation ring, got {n}.')
    result = ring_one(a.registry)
    for _ in range(n):
        result = ring_mul(result, a)
    return result


def _series_mul(s: List[RingElement], t: List[RingElement]) -> List[RingElement]:
    degree = len(s) - 1
    product = [ring_zero(s[0].registry) for _ in range(degree + 1)]
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if not s[i].is_zero() and not t[j].is_zero():
                product[i + j] = product[i + j] + s[i] * t[j]
    return product


def _series_inverse(s: List[RingElement]) -> List[RingElement]:
    # s[0] is the unit
    inverse = [s[0]]
    for n in range(1, len(s)):
        term = ring_zero(s[0].registry)
        for m in range(1, n + 1):
            term = term - s[m] * inverse[n - m]
        inverse.append(term)
    return inverse


def ring_lambda(x: RingElement, i: int) -> RingElement:
    """
    The i-th lambda operation: the i-th exterior power on classes, extended to virtual elements
    through lambda_t(x + y) = lambda_t(x) lambda_t(y) for the series lambda_t = sum_j lambda^j t^j.
    """
    if i < 0:
        raise ValueError(f'Lambda operations need i >= 0, got {i}.')
    registry = x.registry
    series = [ring_one(registry)] + [ring_zero(registry) for _ in range(i)]
    for class_id, c in x.coeffs.items():
        representative = registry.get(class_id).representative
        factor = [ring_from(registry, exterior(representative, j)) for j in range(i + 1)]
        if c < 0:
            factor = _series_inverse(factor)
        for _ in range(abs(c)):
            series = _series_mul(series, factor)
    return series[i]


def rank_value(x: RingElement, descriptor: RankDescriptor) -> int:
    return sum(c * x.registry.rank_of(i, descriptor) for i, c in x.coeffs.items())


def rank_vector(x: RingElement, fns: Sequence[RankDescriptor]) -> List[int]:
    """The values of the given rank functions (subquiver restrictions or pushforwards) on x."""
    return [rank_value(x, descriptor) for descriptor in fns]


def descriptor_label(descriptor: RankDescriptor) -> str:
    if isinstance(descriptor, Subquiver):
        return descriptor.descriptor
    return f'{descriptor.name}_*'


@dataclass
class RankTable:
    """Rank functions (rows) evaluated on classes (columns)."""
    row_labels: List[str]
    col_labels: List[str]
    values: List[List[int]]

    def matrix(self) -> Matrix:
        return Matrix.from_rows(self.values, cols=len(self.col_labels))

    def rank(self) -> int:
        return rank(self.matrix())

    def determinant(self) -> int:
        return int(determinant(self.matrix()))

    def integer_kernel(self) -> List[List[int]]:
        """A basis of the rational kernel, each vector scaled to a primitive integer vector."""
        basis = null_space_columns(self.matrix())
        vectors = []
        for j in range(basis.cols):
            column = [Fraction(c) for c in basis.column(j)]
            scale = 1
            for c in column:
                scale = scale * c.denominator // gcd(scale, c.denominator)
            integers = [int(c * scale) for c in column]
            divisor = 0
            for n in integers:
                divisor = gcd(divisor, n)
            integers = [n // divisor for n in integers]
            # first nonzero entry positive
            if next(n for n in integers if n != 0) < 0:
                integers = [-n for n in integers]
            vectors.append(integers)
        return vectors


def build_rank_table(classes: Sequence[IndecClass], fns: Sequence[RankDescriptor],
                     registry: ClassRegistry) -> RankTable:
    values = [[registry.rank_of(c.id, descriptor) for c in classes] for descriptor in fns]
    return RankTable([descriptor_label(d) for d in fns], [c.label for c in classes], values)
