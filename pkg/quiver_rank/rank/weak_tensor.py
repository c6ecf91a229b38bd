from quiver_rank.linalg.matrix import solve, solve_left
from quiver_rank.rank.rank_functors import max_epi_sub, max_mono_quot
from quiver_rank.rep.representation import Representation, RepMorphism, tensor_morphism


def theta(v: Representation, w: Representation) -> RepMorphism:
    """
    The inclusion Delta(V) (x) Delta(W) -> Delta(V (x) W): a tensor product of epimorphic
    representations is epimorphic, so the product of the two inclusions lands in Delta(V (x) W).
    """
    delta_v, delta_w = max_epi_sub(v), max_epi_sub(w)
    product = tensor_morphism(delta_v.witness, delta_w.witness)
    delta_vw = max_epi_sub(product.target)
    return RepMorphism(product.source, delta_vw.carrier,
                       {x: solve(delta_vw.witness.comps[x], product.comps[x]) for x in v.quiver.vertices})


def zeta(v: Representation, w: Representation) -> RepMorphism:
    """
    The surjection Nabla(V (x) W) -> Nabla(V) (x) Nabla(W), through which the product of the two
    projections factors because the target is monomorphic.
    """
    nabla_v, nabla_w = max_mono_quot(v), max_mono_quot(w)
    product = tensor_morphism(nabla_v.witness, nabla_w.witness)
    nabla_vw = max_mono_quot(product.source)
    return RepMorphism(nabla_vw.carrier, product.target,
                       {x: solve_left(nabla_vw.witness.comps[x], product.comps[x]) for x in v.quiver.vertices})
