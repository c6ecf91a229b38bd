import logging
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from quiver_rank.decompose.decomposition import CANDIDATE_BUDGET, ISO_BUDGET, RANDOM_SEED, indecomposable_parts, iso
from quiver_rank.errors import QuiverMismatchException
from quiver_rank.linalg.field import Field, QQ
from quiver_rank.quiver.quiver import Quiver
from quiver_rank.quiver.quiver_morphism import QuiverMorphism, Subquiver, connected_subquivers
from quiver_rank.rank.rank_functors import pushforward_rank, subquiver_rank
from quiver_rank.rep.representation import DimensionVector, Representation, tensor

Fingerprint = Tuple[DimensionVector, Tuple[int, ...]]
RankDescriptor = Union[Subquiver, QuiverMorphism]


@dataclass(frozen=True, eq=False)
class IndecClass:
    """
    An isomorphism class of indecomposable representations. The fingerprint is the dimension
    vector together with the global ranks of the restrictions to every connected subquiver.
    """
    id: int
    representative: Representation
    fingerprint: Fingerprint
    label: str

    @property
    def dimension_vector(self) -> DimensionVector:
        return self.fingerprint[0]

    @property
    def sort_key(self):
        return self.fingerprint[0], self.fingerprint[1], self.id

    def __eq__(self, other):
        if not isinstance(other, IndecClass):
            return NotImplemented
        return self.id == other.id and self.representative.quiver == other.representative.quiver

    def __hash__(self):
        return hash(self.id)

    def __repr__(self):
        return f'[{self.label}]'


def _default_label(dims: DimensionVector) -> str:
    return '(' + ','.join(str(d) for d in dims) + ')'


class ClassRegistry:
    """
    The indecomposable classes met so far over one quiver. Reads may happen from any thread;
    insertions and cache writes are serialized, and a candidate is compared by iso() against every stored class
    with the same fingerprint before it is added. Tensor products and rank values of classes
    are cached.
    """

    def __init__(self, quiver: Quiver, field: Field = QQ, budget: int = CANDIDATE_BUDGET, seed: int = RANDOM_SEED):
        self.quiver = quiver
        self.field = field
        self.budget = budget
        self.seed = seed
        self._classes: List[IndecClass] = []
        self._lock = threading.Lock()
        self._subquivers: Optional[List[Subquiver]] = None
        self._products: Dict[Tuple[int, int], Dict[int, int]] = {}
        self._ranks: Dict[Tuple[int, RankDescriptor], int] = {}

    @property
    def subquivers(self) -> List[Subquiver]:
        if self._subquivers is None:
            with self._lock:
                if self._subquivers is None:
                    self._subquivers = connected_subquivers(self.quiver)
        return self._subquivers

    @property
    def classes(self) -> List[IndecClass]:
        """Every class, ordered by dimension vector, then fingerprint, then insertion."""
        return sorted(self._classes, key=lambda c: c.sort_key)

    def __len__(self):
        return len(self._classes)

    def get(self, class_id: int) -> IndecClass:
        return self._classes[class_id]

    def fingerprint(self, v: Representation) -> Fingerprint:
        return v.dimension_vector, tuple(subquiver_rank(v, p) for p in self.subquivers)

    def classify(self, v: Representation, label: Optional[str] = None) -> IndecClass:
        """
        The class of an indecomposable representation, added to the registry if it is new.
        A label is only used when a new class is created.
        """
        if v.quiver != self.quiver:
            raise QuiverMismatchException(f'Registry holds classes over {self.quiver.name}, got {v.name} '
                                          f'over {v.quiver.name}.')
        fingerprint = self.fingerprint(v)
        with self._lock:
            for known in self._classes:
                if known.fingerprint == fingerprint and iso(v, known.representative, ISO_BUDGET, self.seed):
                    return known
            created = IndecClass(len(self._classes), v, fingerprint,
                                 label if label is not None else _default_label(v.dimension_vector))
            self._classes.append(created)
        logging.debug(f'New indecomposable class {created.label} with fingerprint {fingerprint}.')
        return created

    def decompose(self, v: Representation) -> List[IndecClass]:
        return [self.classify(part) for part in indecomposable_parts(v, self.budget, self.seed)]

    def product(self, i: int, j: int) -> Dict[int, int]:
        """Multiplicities of the classes in the tensor product of the representatives of i and j."""
        key = (min(i, j), max(i, j))
        if key not in self._products:
            parts = self.decompose(tensor(self.get(key[0]).representative, self.get(key[1]).representative))
            with self._lock:
                self._products.setdefault(key, dict(Counter(c.id for c in parts)))
        return self._products[key]

    def rank_of(self, class_id: int, descriptor: RankDescriptor) -> int:
        key = (class_id, descriptor)
        if key not in self._ranks:
            representative = self.get(class_id).representative
            if isinstance(descriptor, Subquiver):
                value = subquiver_rank(representative, descriptor)
            else:
                value = pushforward_rank(descriptor, representative)
            with self._lock:
                self._ranks.setdefault(key, value)
        return self._ranks[key]
