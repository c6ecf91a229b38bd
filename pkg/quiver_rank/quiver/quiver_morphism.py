from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from quiver_rank.errors import DisconnectedQuiverException, MorphismValidationException, QuiverValidationException
from quiver_rank.quiver.quiver import Quiver, _is_connected


@dataclass(frozen=True, eq=False)
class QuiverMorphism:
    """A map of directed graphs source -> target, given by where it sends each vertex and arrow."""
    source: Quiver
    target: Quiver
    vertex_map: Dict[str, str]
    arrow_map: Dict[str, str]
    name: str = field(default='alpha')

    def vertex(self, x: str) -> str:
        return self.vertex_map[x]

    def arrow(self, a: str) -> str:
        return self.arrow_map[a]

    def __eq__(self, other):
        if not isinstance(other, QuiverMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target \
            and self.vertex_map == other.vertex_map and self.arrow_map == other.arrow_map

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.vertex_map.items())),
                     tuple(sorted(self.arrow_map.items()))))


def validate_morphism(alpha: QuiverMorphism):
    source, target = alpha.source, alpha.target
    for x in source.vertices:
        if x not in alpha.vertex_map:
            raise MorphismValidationException(f'{alpha.name} does not say where vertex {x} goes.')
        if not target.has_vertex(alpha.vertex_map[x]):
            raise MorphismValidationException(f'{alpha.name} sends vertex {x} to {alpha.vertex_map[x]}, '
                                              f'which is not a vertex of {target.name}.')
    for a in source.arrows:
        if a.name not in alpha.arrow_map:
            raise MorphismValidationException(f'{alpha.name} does not say where arrow {a.name} goes.')
        image_name = alpha.arrow_map[a.name]
        if not target.has_arrow(image_name):
            raise MorphismValidationException(f'{alpha.name} sends arrow {a.name} to {image_name}, '
                                              f'which is not an arrow of {target.name}.')
        image = target.arrow(image_name)
        if image.tail != alpha.vertex_map[a.tail] or image.head != alpha.vertex_map[a.head]:
            raise MorphismValidationException(f'{alpha.name} sends {a.name}: {a.tail} -> {a.head} to '
                                              f'{image.name}: {image.tail} -> {image.head}, '
                                              f'which does not start and end at the images of {a.tail} and {a.head}.')
    extra = set(alpha.vertex_map) - set(source.vertices) | set(alpha.arrow_map) - set(source.arrow_names)
    if extra:
        raise MorphismValidationException(f'{alpha.name} maps names that are not in {source.name}: {sorted(extra)}.')


def identity_morphism(q: Quiver) -> QuiverMorphism:
    return QuiverMorphism(q, q, {x: x for x in q.vertices}, {a.name: a.name for a in q.arrows}, name=f'id_{q.name}')


@dataclass(frozen=True, eq=False)
class Subquiver:
    """A connected subquiver, carried as a quiver of its own together with its inclusion."""
    quiver: Quiver
    inclusion: QuiverMorphism

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> Tuple[str, ...]:
        return self.quiver.arrow_names

    @property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """(vertex indices, arrow indices) in the parent; the order connected_subquivers sorts by."""
        parent = self.inclusion.target
        return tuple(parent.vertex_index(x) for x in self.vertices), tuple(parent.arrow_index(a) for a in self.arrows)

    @property
    def descriptor(self) -> str:
        # the same "v1,v2:a1,a2" text the CLI accepts for --sub
        return f"{','.join(self.vertices)}:{','.join(self.arrows)}"

    def __eq__(self, other):
        if not isinstance(other, Subquiver):
            return NotImplemented
        return self.inclusion.target == other.inclusion.target and self.key == other.key

    def __hash__(self):
        return hash((self.inclusion.target, self.key))

    def __repr__(self):
        return f'Subquiver({self.descriptor})'


def subquiver(q: Quiver, vertices: Sequence[str], arrows: Sequence[str] = ()) -> Subquiver:
    """
    The subquiver of q on the given vertices and arrows, kept in q's order. Raises if an arrow
    leaves the vertex set or the result is not connected.
    """
    vertex_set = set(vertices)
    arrow_set = set(arrows)
    for x in vertex_set:
        q.vertex_index(x)
    for a in arrow_set:
        arrow = q.arrow(a)
        if arrow.tail not in vertex_set or arrow.head not in vertex_set:
            raise QuiverValidationException(f'Arrow {a} does not have both ends among {sorted(vertex_set)}.')
    kept_vertices = tuple(x for x in q.vertices if x in vertex_set)
    kept_arrows = tuple(a for a in q.arrows if a.name in arrow_set)
    if not _is_connected(kept_vertices, kept_arrows):
        raise DisconnectedQuiverException(f'Subquiver on {list(kept_vertices)} with arrows '
                                          f'{[a.name for a in kept_arrows]} is not connected.')
    sub = Quiver(kept_vertices, kept_arrows,
                 name=f"{q.name}[{','.join(kept_vertices)}:{','.join(a.name for a in kept_arrows)}]")
    inclusion = QuiverMorphism(sub, q, {x: x for x in kept_vertices}, {a.name: a.name for a in kept_arrows},
                               name=f'incl_{sub.name}')
    return Subquiver(sub, inclusion)


def full_subquiver(q: Quiver) -> Subquiver:
    return subquiver(q, q.vertices, q.arrow_names)


def connected_subquivers(q: Quiver) -> List[Subquiver]:
    """
    Every connected subquiver of q: any nonempty vertex subset with any subset of the arrows
    between those vertices, whenever the result is connected. Sorted by vertex indices, then
    arrow indices.
    """
    found = []
    n = len(q.vertices)
    for size in range(1, n + 1):
        for vertex_indices in combinations(range(n), size):
            vertex_set = {q.vertices[i] for i in vertex_indices}
            vertices = [q.vertices[i] for i in vertex_indices]
            inner = [i for i, a in enumerate(q.arrows) if a.tail in vertex_set and a.head in vertex_set]
            for arrow_count in range(len(inner) + 1):
                for arrow_indices in combinations(inner, arrow_count):
                    arrows = [q.arrows[i] for i in arrow_indices]
                    if _is_connected(vertices, arrows):
                        found.append(subquiver(q, vertices, [a.name for a in arrows]))
    return sorted(found, key=lambda s: s.key)
