from typing import List

import numpy as np

from quiver_rank.linalg.matrix import Matrix, kronecker, null_space_columns
from quiver_rank.rep.representation import Representation, RepMorphism, _check_same


def _unknown_offsets(v: Representation, w: Representation):
    offsets = {}
    total = 0
    for x in v.quiver.vertices:
        offsets[x] = total
        total += v.dims[x] * w.dims[x]
    return offsets, total


def intertwining_system(v: Representation, w: Representation) -> Matrix:
    """
    The linear system whose kernel is Hom(v, w). Unknowns are the entries of the components
    X_x, vertex by vertex, each block column-major; one block row per arrow a: t -> h encodes
    X_h V_a - W_a X_t = 0 through vec(X_h V_a) = (V_a^T (x) I) vec(X_h) and
    vec(W_a X_t) = (I (x) W_a) vec(X_t).
    """
    k = v.field
    offsets, total = _unknown_offsets(v, w)
    equation_rows = sum(w.dims[a.head] * v.dims[a.tail] for a in v.quiver.arrows)
    system = np.empty((equation_rows, total), dtype=object)
    system.fill(k.zero)
    row = 0
    for a in v.quiver.arrows:
        t, h = a.tail, a.head
        height = w.dims[h] * v.dims[t]
        head_block = kronecker(v.mats[a.name].T, Matrix.identity(k, w.dims[h])).to_array()
        tail_block = kronecker(Matrix.identity(k, v.dims[t]), w.mats[a.name]).to_array()
        system[row:row + height, offsets[h]:offsets[h] + head_block.shape[1]] += head_block
        system[row:row + height, offsets[t]:offsets[t] + tail_block.shape[1]] -= tail_block
        row += height
    return Matrix(k, k.normalize(system))


def hom_space(v: Representation, w: Representation) -> List[RepMorphism]:
    """A basis of Hom(v, w), one morphism per free variable of the intertwining system."""
    _check_same(v, w)
    offsets, total = _unknown_offsets(v, w)
    kernel = null_space_columns(intertwining_system(v, w)).to_array()
    basis = []
    for j in range(kernel.shape[1]):
        comps = {}
        for x in v.quiver.vertices:
            dv, dw = v.dims[x], w.dims[x]
            segment = kernel[offsets[x]:offsets[x] + dv * dw, j]
            comps[x] = Matrix(v.field, segment.reshape((dv, dw)).T.copy())
        basis.append(RepMorphism(v, w, comps))
    return basis


def hom_dim(v: Representation, w: Representation) -> int:
    _check_same(v, w)
    return null_space_columns(intertwining_system(v, w)).cols
