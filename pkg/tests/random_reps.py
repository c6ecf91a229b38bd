import random
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional

from hypothesis import strategies as st

from quiver_rank.linalg.field import Field, QQ
from quiver_rank.linalg.matrix import Matrix
from quiver_rank.linalg.subspace import Subspace
from quiver_rank.quiver.quiver import Arrow, Quiver
from quiver_rank.rep.representation import Representation, representation

ENTRY_RANGE = 2


def random_matrix(rng: random.Random, rows: int, cols: int, field: Field = QQ) -> Matrix:
    return Matrix.from_rows([[rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(cols)] for _ in range(rows)],
                            field, cols=cols)


def random_rep(q: Quiver, rng: random.Random, max_dim: int = 2, field: Field = QQ, name: str = 'V',
               dims: Optional[Dict[str, int]] = None) -> Representation:
    if dims is None:
        dims = {x: rng.randint(0, max_dim) for x in q.vertices}
    mats = {a.name: random_matrix(rng, dims[a.head], dims[a.tail], field) for a in q.arrows}
    return representation(q, dims, mats, field, name)


@st.composite
def reps(draw, q: Quiver, max_dim: int = 2, field: Field = QQ, name: str = 'V') -> Representation:
    dims = {x: draw(st.integers(min_value=0, max_value=max_dim)) for x in q.vertices}
    entries = st.integers(min_value=-ENTRY_RANGE, max_value=ENTRY_RANGE)
    mats = {a.name: [[draw(entries) for _ in range(dims[a.tail])] for _ in range(dims[a.head])] for a in q.arrows}
    return representation(q, dims, mats, field, name)


# exhaustive enumeration over a finite field ###########################################################

def dimension_vectors(q: Quiver, total_dim: int) -> Iterator[Dict[str, int]]:
    """Every dimension vector of q with the given total dimension."""
    for dims in product(range(total_dim + 1), repeat=len(q.vertices)):
        if sum(dims) == total_dim:
            yield dict(zip(q.vertices, dims))


def all_matrices(field: Field, rows: int, cols: int) -> Iterator[Matrix]:
    for entries in product(field.elements(), repeat=rows * cols):
        yield Matrix.from_rows([entries[i * cols:(i + 1) * cols] for i in range(rows)], field, cols=cols)


def all_reps(q: Quiver, field: Field, total_dim: int) -> Iterator[Representation]:
    """Every representation of q over a finite field with the given total dimension."""
    for dims in dimension_vectors(q, total_dim):
        choices = [list(all_matrices(field, dims[a.head], dims[a.tail])) for a in q.arrows]
        for mats in product(*choices):
            yield Representation(q, dims, dict(zip(q.arrow_names, mats)), field, 'V')


# brute-force oracles over GF(2) ##################################################################
# A vector of GF(2)^n is an int whose bit i is its i-th coordinate. A subspace is the frozenset of its vectors.

def bit_columns(m: Matrix) -> List[int]:
    return [sum(int(m.entry(i, j)) << i for i in range(m.rows)) for j in range(m.cols)]


def apply_bits(columns: List[int], vector: int) -> int:
    result = 0
    for j, column in enumerate(columns):
        if vector >> j & 1:
            result ^= column
    return result


def bit_span(vectors: Iterable[int]) -> FrozenSet[int]:
    span = {0}
    for u in vectors:
        if u not in span:
            span |= {u ^ s for s in span}
    return frozenset(span)


def bit_subspace(s: Subspace) -> FrozenSet[int]:
    return bit_span(bit_columns(s.basis))


def bit_dim(s: FrozenSet[int]) -> int:
    return len(s).bit_length() - 1


@lru_cache(maxsize=None)
def bit_subspaces(n: int) -> List[FrozenSet[int]]:
    """Every subspace of GF(2)^n, grown one vector at a time from 0."""
    found = {frozenset({0})}
    frontier = list(found)
    while frontier:
        grown = []
        for s in frontier:
            for u in range(1 << n):
                if u not in s:
                    larger = frozenset(s | {u ^ t for t in s})
                    if larger not in found:
                        found.add(larger)
                        grown.append(larger)
        frontier = grown
    return sorted(found, key=lambda s: (len(s), sorted(s)))


class BitRep:
    """A representation over GF(2) with its arrows as column bitmasks."""

    def __init__(self, v: Representation):
        if v.field.characteristic != 2:
            raise ValueError(f'Brute-force oracles need GF(2), got {v.field}.')
        self.quiver = v.quiver
        self.dims = dict(v.dims)
        self.maps = {a.name: bit_columns(v.mats[a.name]) for a in v.quiver.arrows}

    def families(self) -> Iterator[Dict[str, FrozenSet[int]]]:
        choices = [bit_subspaces(self.dims[x]) for x in self.quiver.vertices]
        for family in product(*choices):
            yield dict(zip(self.quiver.vertices, family))

    def image(self, a: Arrow, s: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(apply_bits(self.maps[a.name], u) for u in s)

    def preimage(self, a: Arrow, s: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(u for u in range(1 << self.dims[a.tail]) if apply_bits(self.maps[a.name], u) in s)

    def is_subrep(self, family: Dict[str, FrozenSet[int]]) -> bool:
        return all(self.image(a, family[a.tail]) <= family[a.head] for a in self.quiver.arrows)


def total_bit_dim(family: Dict[str, FrozenSet[int]]) -> int:
    return sum(bit_dim(s) for s in family.values())


def largest_epimorphic_family(v: Representation) -> Dict[str, FrozenSet[int]]:
    """
    The subrepresentation of largest total dimension on which every arrow maps onto the space at
    its head, found by trying every family of subspaces.
    """
    bits = BitRep(v)
    best = None
    for family in bits.families():
        if all(bits.image(a, family[a.tail]) == family[a.head] for a in bits.quiver.arrows):
            if best is None or total_bit_dim(family) > total_bit_dim(best):
                best = family
    return best


def smallest_monomorphic_kernels(v: Representation) -> Dict[str, FrozenSet[int]]:
    """
    The subrepresentation K of smallest total dimension such that every arrow of v/K is injective,
    that is every arrow pulls K at its head back to exactly K at its tail.
    """
    bits = BitRep(v)
    best = None
    for family in bits.families():
        if all(bits.preimage(a, family[a.head]) == family[a.tail] for a in bits.quiver.arrows):
            if best is None or total_bit_dim(family) < total_bit_dim(best):
                best = family
    return best


def has_complemented_subrep(v: Representation) -> bool:
    """Whether v is the direct sum of two nonzero subrepresentations, by trying every pair of families."""
    bits = BitRep(v)
    families = [f for f in bits.families() if bits.is_subrep(f)]
    for first in families:
        first_dim = total_bit_dim(first)
        if first_dim == 0 or first_dim == v.total_dim:
            continue
        for second in families:
            if all(len(first[x] & second[x]) == 1 and len(first[x]) * len(second[x]) == 1 << bits.dims[x]
                   for x in bits.quiver.vertices):
                return True
    return False
