from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Tuple

import numpy as np

from quiver_rank.linalg.matrix import Matrix, determinant

# Basis of the k-th exterior power of K^n: ascending index subsets, lexicographic.
# Basis of the k-th symmetric power of K^n: weakly ascending index tuples (monomials), lexicographic.


def exterior_basis(n: int, k: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(n), k))


def symmetric_basis(n: int, k: int) -> List[Tuple[int, ...]]:
    return list(combinations_with_replacement(range(n), k))


def exterior_power(m: Matrix, k: int) -> Matrix:
    """The matrix of k x k minors of m."""
    if k < 0:
        raise ValueError(f'Exterior powers need k >= 0, got {k}.')
    row_sets = exterior_basis(m.rows, k)
    col_sets = exterior_basis(m.cols, k)
    entries = np.empty((len(row_sets), len(col_sets)), dtype=object)
    for i, rows in enumerate(row_sets):
        for j, cols in enumerate(col_sets):
            entries[i, j] = determinant(m.submatrix(rows, cols))
    return Matrix(m.field, entries)


def symmetric_power(m: Matrix, k: int) -> Matrix:
    """
    The map induced on degree-k polynomials in the monomial basis: the source monomial
    e_j1 ... e_jk is sent to the expanded product of the images m e_j1, ..., m e_jk.
    """
    if k < 0:
        raise ValueError(f'Symmetric powers need k >= 0, got {k}.')
    field = m.field
    row_monomials = symmetric_basis(m.rows, k)
    col_monomials = symmetric_basis(m.cols, k)
    row_index = {monomial: i for i, monomial in enumerate(row_monomials)}
    entries = np.empty((len(row_monomials), len(col_monomials)), dtype=object)
    entries.fill(field.zero)
    for j, monomial in enumerate(col_monomials):
        product: Dict[Tuple[int, ...], object] = {(): field.one}
        for source_index in monomial:
            expanded = {}
            for term, coefficient in product.items():
                for target_index in range(m.rows):
                    c = m.entry(target_index, source_index)
                    if c == 0:
                        continue
                    key = tuple(sorted(term + (target_index,)))
                    expanded[key] = expanded.get(key, field.zero) + coefficient * c
            product = expanded
        for term, coefficient in product.items():
            entries[row_index[term], j] = field.coerce(coefficient)
    return Matrix(m.field, entries)
