import logging
import random
from typing import Iterator, List, Optional, Tuple

import numpy as np

from quiver_rank.errors import DimensionMismatchException, QuiverRankException, UndecidedException
from quiver_rank.linalg.matrix import Matrix, rank
from quiver_rank.linalg.polynomial import char_poly, roots_in_field
from quiver_rank.linalg.subspace import image, kernel
from quiver_rank.rank.rank_functors import sub_from_spaces
from quiver_rank.rep.hom import hom_space
from quiver_rank.rep.representation import Representation, RepMorphism, _check_same, identity_morphism, \
    linear_combination

# Candidates tried per phase of the splitting search, and in the isomorphism search.
CANDIDATE_BUDGET = 64
ISO_BUDGET = 64
RANDOM_SEED = 8191
# Coefficients of the random linear combinations are drawn from [-RANDOM_RANGE, RANDOM_RANGE].
RANDOM_RANGE = 2


def end_algebra(v: Representation) -> List[RepMorphism]:
    return hom_space(v, v)


def fitting_split(v: Representation, phi: RepMorphism) -> Optional[Tuple[Representation, Representation]]:
    """
    Splits v as ker(phi^n) (+) im(phi^n), n the total dimension of v, when both parts are
    nonzero. Returns None when phi^n is nilpotent or invertible.
    """
    if phi.source != v or phi.target != v:
        raise DimensionMismatchException(f'Fitting splits need an endomorphism of {v.name}.')
    stable = phi.power(v.total_dim)
    kernels = {x: kernel(stable.comps[x]) for x in v.quiver.vertices}
    images = {x: image(stable.comps[x]) for x in v.quiver.vertices}
    if all(s.is_zero() for s in kernels.values()) or all(s.is_zero() for s in images.values()):
        return None
    nilpotent_part = sub_from_spaces(v, kernels, name=f'{v.name}.0').carrier
    invertible_part = sub_from_spaces(v, images, name=f'{v.name}.1').carrier
    return nilpotent_part, invertible_part


def eigenvalues(phi: RepMorphism) -> List:
    """Distinct eigenvalues of phi lying in the base field, over all vertices."""
    found = set()
    for x, m in phi.comps.items():
        if m.rows > 0:
            found.update(roots_in_field(char_poly(m)))
    return sorted(found)


def _shifted(phi: RepMorphism) -> Iterator[RepMorphism]:
    identity = identity_morphism(phi.source)
    for value in eigenvalues(phi):
        if value != 0:
            yield phi - identity.scale(value)


def split_candidates(v: Representation, basis: List[RepMorphism], budget: int = CANDIDATE_BUDGET,
                     seed: int = RANDOM_SEED) -> Iterator[RepMorphism]:
    """
    Endomorphisms to try, in a fixed order and in phases of at most `budget` candidates each:
    the basis elements; their pairwise sums and differences; phi - lambda for each eigenvalue
    lambda in the base field of a candidate phi from the first two phases; seeded random
    small-integer combinations of the basis, each followed by its eigenvalue shifts.
    """
    basis = [f for f in basis if not f.is_zero()]
    yield from basis[:budget]

    pairs = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if len(pairs) >= budget:
                break
            pairs.append(basis[i] + basis[j])
            pairs.append(basis[i] - basis[j])
    yield from pairs[:budget]

    shifts = 0
    for phi in basis + pairs:
        for shifted in _shifted(phi):
            if shifts >= budget:
                break
            shifts += 1
            yield shifted
        if shifts >= budget:
            break

    if len(basis) == 0:
        return
    rng = random.Random(seed)
    produced = 0
    while produced < budget:
        coefficients = [rng.randint(-RANDOM_RANGE, RANDOM_RANGE) for _ in basis]
        phi = linear_combination(coefficients, basis, v, v)
        produced += 1
        yield phi
        for shifted in _shifted(phi):
            if produced >= budget:
                break
            produced += 1
            yield shifted


def find_fitting_split(v: Representation, budget: int = CANDIDATE_BUDGET,
                       seed: int = RANDOM_SEED) -> Optional[Tuple[Representation, Representation]]:
    """Searches End(v) for an endomorphism with a nontrivial Fitting split. Works over any field."""
    if v.is_zero():
        return None
    for tried, phi in enumerate(split_candidates(v, end_algebra(v), budget, seed)):
        split = fitting_split(v, phi)
        if split is not None:
            logging.debug(f'Split {v.name} {v.dimension_vector} into {split[0].dimension_vector} + '
                          f'{split[1].dimension_vector} after {tried + 1} candidates.')
            return split
    return None


def _require_rational(v: Representation):
    if not v.field.is_rational():
        raise QuiverRankException(f'Indecomposability is only certified over QQ, {v.name} is over {v.field}.')


def semisimple_rank(v: Representation, basis: List[RepMorphism] = None) -> int:
    """
    dim End(v)/rad End(v). In characteristic zero the radical is the kernel of the trace form
    (f, g) |-> tr(f g) of End(v) acting on v itself, with the trace summed over all vertices.
    In characteristic zero this form and the trace of left multiplication on End(v) have the same
    kernel, so either gives the radical.
    """
    _require_rational(v)
    if basis is None:
        basis = end_algebra(v)
    d = len(basis)
    gram = np.empty((d, d), dtype=object)
    for i in range(d):
        for j in range(i, d):
            value = sum((basis[i].comps[x] @ basis[j].comps[x]).trace() for x in v.quiver.vertices)
            gram[i, j] = value
            gram[j, i] = value
    return rank(Matrix.from_array(gram, v.field))


def _certify(v: Representation, budget: int, seed: int) -> Optional[Tuple[Representation, Representation]]:
    """None when v is certainly indecomposable, otherwise a split; raises if neither is found."""
    _require_rational(v)
    if v.is_zero():
        raise DimensionMismatchException('The zero representation is neither decomposable nor indecomposable.')
    basis = end_algebra(v)
    if semisimple_rank(v, basis) == 1:
        return None
    split = None
    for phi in split_candidates(v, basis, budget, seed):
        split = fitting_split(v, phi)
        if split is not None:
            break
    if split is None:
        logging.warning(f'No splitting endomorphism of {v.name} {v.dimension_vector} found '
                        f'within the candidate budget of {budget} per phase.')
        raise UndecidedException(f'Could not decide whether {v.name} with dimension vector '
                                 f'{v.dimension_vector} is indecomposable.', part=v)
    return split


def is_indec(v: Representation, budget: int = CANDIDATE_BUDGET, seed: int = RANDOM_SEED) -> bool:
    return _certify(v, budget, seed) is None


def indecomposable_parts(v: Representation, budget: int = CANDIDATE_BUDGET,
                         seed: int = RANDOM_SEED) -> List[Representation]:
    """
    Krull-Schmidt summands of v, split recursively until each part is certified indecomposable,
    ordered by dimension vector.
    """
    parts = []
    pending = [v]
    while pending:
        part = pending.pop()
        if part.is_zero():
            continue
        split = _certify(part, budget, seed)
        if split is None:
            parts.append(part)
        else:
            logging.debug(f'Split {part.dimension_vector} into {split[0].dimension_vector} + {split[1].dimension_vector}.')
            pending.extend(split)
    return sorted(parts, key=lambda p: p.dimension_vector)


def decompose(v: Representation, registry=None, budget: int = CANDIDATE_BUDGET, seed: int = RANDOM_SEED) -> List:
    """
    The Krull-Schmidt decomposition of v as a list of indecomposable classes (with repetition),
    classified in `registry`, or in a fresh registry for v's quiver.
    """
    from quiver_rank.decompose.class_registry import ClassRegistry

    if registry is None:
        registry = ClassRegistry(v.quiver, v.field, budget=budget, seed=seed)
    return registry.decompose(v)


def _local(v: Representation) -> bool:
    try:
        return semisimple_rank(v) == 1
    except QuiverRankException:
        return False


def iso(v: Representation, w: Representation, budget: int = ISO_BUDGET, seed: int = RANDOM_SEED) -> bool:
    """
    Whether v and w are isomorphic, by looking for an invertible element of Hom(v, w). When none
    turns up and both have End/rad = K, v and w are isomorphic exactly when some composite
    g f of basis elements f: v -> w, g: w -> v is invertible.
    """
    _check_same(v, w)
    if v.dimension_vector != w.dimension_vector:
        return False
    if v.is_zero():
        return True
    forward = hom_space(v, w)
    if len(forward) == 0:
        return False
    backward = hom_space(w, v)
    if len(backward) == 0:
        return False

    for f in forward[:budget]:
        if f.is_invertible():
            return True
    tried = 0
    for i in range(len(forward)):
        for j in range(i + 1, len(forward)):
            if tried >= budget:
                break
            tried += 1
            if (forward[i] + forward[j]).is_invertible() or (forward[i] - forward[j]).is_invertible():
                return True
    rng = random.Random(seed)
    for _ in range(budget):
        coefficients = [rng.randint(-RANDOM_RANGE, RANDOM_RANGE) for _ in forward]
        if linear_combination(coefficients, forward, v, w).is_invertible():
            return True

    if _local(v) and _local(w):
        return any((g @ f).is_invertible() for f in forward for g in backward)
    raise UndecidedException(f'No isomorphism between {v.name} and {w.name} found within the budget '
                             f'of {budget}, and neither is certified local.', part=v)
