from dataclasses import dataclass
from typing import Dict

import numpy as np

from quiver_rank.linalg.matrix import Matrix, null_space_columns
from quiver_rank.quiver.quiver import validate
from quiver_rank.rep.representation import Representation


@dataclass(frozen=True)
class LimitData:
    """
    Limit and colimit of a representation viewed as a diagram over the path category.
    alpha[x]: lim -> V_x and beta[x]: V_x -> colim are the cone and cocone maps, and
    eta = beta[x] . alpha[x], which is the same matrix at every vertex.
    """
    lim_dim: int
    alpha: Dict[str, Matrix]
    colim_dim: int
    beta: Dict[str, Matrix]
    eta: Matrix


def _offsets(v: Representation) -> Dict[str, int]:
    offsets = {}
    total = 0
    for x in v.quiver.vertices:
        offsets[x] = total
        total += v.dims[x]
    return offsets


def compatibility_map(v: Representation) -> Matrix:
    """(v_x) |-> (V_a v_ta - v_ha) from the product of all V_x to the product over arrows of V_ha."""
    k = v.field
    offsets = _offsets(v)
    rows = sum(v.dims[a.head] for a in v.quiver.arrows)
    entries = np.empty((rows, v.total_dim), dtype=object)
    entries.fill(k.zero)
    row = 0
    for a in v.quiver.arrows:
        t, h = a.tail, a.head
        entries[row:row + v.dims[h], offsets[t]:offsets[t] + v.dims[t]] += v.mats[a.name].to_array()
        for i in range(v.dims[h]):
            entries[row + i, offsets[h] + i] -= k.one
        row += v.dims[h]
    return Matrix(k, k.normalize(entries))


def relation_map(v: Representation) -> Matrix:
    """The map from the sum over arrows of V_ta into the sum of all V_x, v |-> i_ta(v) - i_ha(V_a v)."""
    k = v.field
    offsets = _offsets(v)
    cols = sum(v.dims[a.tail] for a in v.quiver.arrows)
    entries = np.empty((v.total_dim, cols), dtype=object)
    entries.fill(k.zero)
    col = 0
    for a in v.quiver.arrows:
        t, h = a.tail, a.head
        for j in range(v.dims[t]):
            entries[offsets[t] + j, col + j] += k.one
        entries[offsets[h]:offsets[h] + v.dims[h], col:col + v.dims[t]] -= v.mats[a.name].to_array()
        col += v.dims[t]
    return Matrix(k, k.normalize(entries))


def limit(v: Representation) -> LimitData:
    validate(v.quiver)
    offsets = _offsets(v)
    vertices = v.quiver.vertices

    lim_basis = null_space_columns(compatibility_map(v))
    alpha = {x: lim_basis.row_block(offsets[x], offsets[x] + v.dims[x]) for x in vertices}

    # the rows of beta span the annihilator of the relations, so beta is the cokernel projection
    beta_all = null_space_columns(relation_map(v).T).T
    beta = {x: beta_all.col_block(offsets[x], offsets[x] + v.dims[x]) for x in vertices}

    first = vertices[0]
    return LimitData(lim_basis.cols, alpha, beta_all.rows, beta, beta[first] @ alpha[first])
