import logging
from dataclasses import dataclass
from typing import Dict

from quiver_rank.errors import QuiverRankException, QuiverValidationException
from quiver_rank.linalg.matrix import solve, solve_left
from quiver_rank.linalg.subspace import Subspace, image, intersect, kernel, preimage, push_forward
from quiver_rank.quiver.quiver import validate
from quiver_rank.quiver.quiver_morphism import QuiverMorphism, Subquiver
from quiver_rank.rep.limits import limit
from quiver_rank.rep.representation import Representation, RepMorphism, dual, pullback, restrict

SUB = 'sub'
QUOTIENT = 'quotient'


@dataclass(frozen=True)
class SubQuot:
    """
    A subrepresentation (kind 'sub', witness an inclusion carrier -> ambient) or a quotient
    (kind 'quotient', witness a projection ambient -> carrier). `spaces` holds the subspace at
    each vertex for a sub, and the kernel of the projection for a quotient.
    """
    carrier: Representation
    witness: RepMorphism
    kind: str
    spaces: Dict[str, Subspace]


@dataclass(frozen=True)
class GammaResult:
    gamma: Representation
    from_delta: RepMorphism
    into_nabla: RepMorphism
    global_rank: int


def sub_from_spaces(v: Representation, spaces: Dict[str, Subspace], name: str = 'U') -> SubQuot:
    """
    The subrepresentation on the given subspaces, which must be carried into each other by the
    arrows. Arrow matrices are written in the canonical bases of the subspaces.
    """
    bases = {x: spaces[x].basis for x in v.quiver.vertices}
    mats = {a.name: solve(bases[a.head], v.mats[a.name] @ bases[a.tail]) for a in v.quiver.arrows}
    carrier = Representation(v.quiver, {x: spaces[x].dim for x in v.quiver.vertices}, mats, v.field, name)
    return SubQuot(carrier, RepMorphism(carrier, v, bases), SUB, dict(spaces))


def quotient_from_kernels(v: Representation, kernels: Dict[str, Subspace], name: str = 'Q') -> SubQuot:
    """
    The quotient by the given subspaces, which must be carried into each other by the arrows.
    The projection at x is the annihilator of kernels[x].
    """
    projections = {x: kernels[x].annihilator() for x in v.quiver.vertices}
    mats = {a.name: solve_left(projections[a.tail], projections[a.head] @ v.mats[a.name]) for a in v.quiver.arrows}
    carrier = Representation(v.quiver, {x: projections[x].rows for x in v.quiver.vertices}, mats, v.field, name)
    return SubQuot(carrier, RepMorphism(v, carrier, projections), QUOTIENT, dict(kernels))


def max_epi_sub(v: Representation) -> SubQuot:
    """
    The largest subrepresentation on which every arrow map is surjective, found as the greatest
    fixed point of U_x <- U_x & (images of U_ta under arrows into x) & (preimages of U_ha
    under arrows out of x), starting from U = V. Each sweep that changes anything lowers the
    total dimension, so there are at most total_dim + 1 sweeps.
    """
    q = v.quiver
    spaces = {x: Subspace.full(v.field, v.dims[x]) for x in q.vertices}
    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        for x in q.vertices:
            updated = spaces[x]
            for a in q.arrows_into(x):
                updated = intersect(updated, push_forward(v.mats[a.name], spaces[a.tail]))
            for a in q.arrows_out_of(x):
                updated = intersect(updated, preimage(v.mats[a.name], spaces[a.head]))
            if updated != spaces[x]:
                spaces[x] = updated
                changed = True
    logging.debug(f'Maximal epimorphic subrepresentation of {v.name} stable after {sweeps} sweeps.')
    return sub_from_spaces(v, spaces, name=f'Delta({v.name})')


def max_mono_quot(v: Representation) -> SubQuot:
    """
    The largest quotient on which every arrow map is injective, computed by duality as
    D(Delta(D V)) over the opposite quiver. The projection at x is the transpose of the
    inclusion of Delta(D V)_x into V_x^*.
    """
    dual_sub = max_epi_sub(dual(v))
    carrier = dual(dual_sub.carrier).renamed(f'Nabla({v.name})')
    projections = {x: dual_sub.witness.comps[x].T for x in v.quiver.vertices}
    witness = RepMorphism(v, carrier, projections)
    return SubQuot(carrier, witness, QUOTIENT, {x: kernel(projections[x]) for x in v.quiver.vertices})


def global_tensor(v: Representation) -> GammaResult:
    """
    Gamma(V), the image of Delta(V) -> V -> Nabla(V), with the surjection from Delta(V) and the
    inclusion into Nabla(V). Every arrow map of Gamma(V) is an isomorphism, so on a connected
    quiver its dimension is the same at every vertex: that number is the global rank.
    """
    validate(v.quiver)
    delta = max_epi_sub(v)
    nabla = max_mono_quot(v)
    q = v.quiver
    composite = {x: nabla.witness.comps[x] @ delta.witness.comps[x] for x in q.vertices}
    bases = {x: image(composite[x]).basis for x in q.vertices}
    mats = {a.name: solve(bases[a.head], nabla.carrier.mats[a.name] @ bases[a.tail]) for a in q.arrows}
    gamma = Representation(q, {x: bases[x].cols for x in q.vertices}, mats, v.field, f'Gamma({v.name})')
    from_delta = RepMorphism(delta.carrier, gamma, {x: solve(bases[x], composite[x]) for x in q.vertices})
    into_nabla = RepMorphism(gamma, nabla.carrier, bases)
    dims = set(gamma.dimension_vector)
    if len(dims) != 1:
        raise QuiverRankException(f'Gamma({v.name}) has dimensions {gamma.dimension_vector}, which are not constant.')
    return GammaResult(gamma, from_delta, into_nabla, dims.pop())


def global_rank(v: Representation) -> int:
    return global_tensor(v).global_rank


def pushforward_rank(alpha: QuiverMorphism, v: Representation) -> int:
    """The global rank of the pullback of v along alpha, a rank function on alpha's target."""
    validate(alpha.source)
    return global_rank(pullback(alpha, v))


def subquiver_rank(v: Representation, p: Subquiver) -> int:
    return global_rank(restrict(v, p))


def _require_tree(v: Representation):
    if not v.quiver.is_tree():
        raise QuiverValidationException(f'Quiver {v.quiver.name} is not a tree; limits do not describe Delta and Nabla there.')


def max_epi_sub_via_limits(v: Representation) -> SubQuot:
    """On a tree, Delta(V)_x is the image of the cone map lim V -> V_x."""
    _require_tree(v)
    data = limit(v)
    return sub_from_spaces(v, {x: image(data.alpha[x]) for x in v.quiver.vertices}, name=f'Delta({v.name})')


def max_mono_quot_via_limits(v: Representation) -> SubQuot:
    """On a tree, Nabla(V)_x is V_x modulo the kernel of the cocone map V_x -> colim V."""
    _require_tree(v)
    data = limit(v)
    return quotient_from_kernels(v, {x: kernel(data.beta[x]) for x in v.quiver.vertices}, name=f'Nabla({v.name})')
