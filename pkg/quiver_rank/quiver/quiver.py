from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from quiver_rank.errors import DisconnectedQuiverException, PathCompositionException, QuiverValidationException


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str

    def reversed(self) -> 'Arrow':
        return Arrow(self.name, self.head, self.tail)

    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class Quiver:
    """
    A finite directed multigraph. The order of `vertices` and `arrows` is the canonical index
    order used for every matrix layout downstream. Loops and parallel arrows are allowed.

    Construction checks that names are unique and that every arrow ends at declared vertices;
    connectedness is recorded and only enforced by validate().
    """
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    name: str = field(default='Q', compare=False)

    _vertex_index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _arrow_index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'arrows', tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverValidationException(f'Duplicate vertex name in quiver {self.name}.')
        arrow_names = [a.name for a in self.arrows]
        if len(set(arrow_names)) != len(arrow_names):
            raise QuiverValidationException(f'Duplicate arrow name in quiver {self.name}.')
        vertex_index = {v: i for i, v in enumerate(self.vertices)}
        for a in self.arrows:
            for end in (a.tail, a.head):
                if end not in vertex_index:
                    raise QuiverValidationException(f'Arrow {a.name} of quiver {self.name} ends at unknown vertex {end}.')
        object.__setattr__(self, '_vertex_index', vertex_index)
        object.__setattr__(self, '_arrow_index', {a.name: i for i, a in enumerate(self.arrows)})

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def vertex_index(self, x: str) -> int:
        try:
            return self._vertex_index[x]
        except KeyError:
            raise QuiverValidationException(f'Quiver {self.name} has no vertex {x}.')

    def arrow_index(self, a: str) -> int:
        try:
            return self._arrow_index[a]
        except KeyError:
            raise QuiverValidationException(f'Quiver {self.name} has no arrow {a}.')

    def has_vertex(self, x: str) -> bool:
        return x in self._vertex_index

    def has_arrow(self, a: str) -> bool:
        return a in self._arrow_index

    def arrow(self, a: str) -> Arrow:
        return self.arrows[self.arrow_index(a)]

    @property
    def arrow_names(self) -> Tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def arrows_into(self, x: str) -> List[Arrow]:
        return [a for a in self.arrows if a.head == x]

    def arrows_out_of(self, x: str) -> List[Arrow]:
        return [a for a in self.arrows if a.tail == x]

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and _is_connected(self.vertices, self.arrows)

    def is_tree(self) -> bool:
        """Whether the underlying undirected multigraph is a tree (no loops, no parallel arrows, no cycles)."""
        return self.is_connected() and len(self.arrows) == len(self.vertices) - 1


def _is_connected(vertices: Sequence[str], arrows: Iterable[Arrow]) -> bool:
    if len(vertices) == 0:
        return False
    neighbours = {v: set() for v in vertices}
    for a in arrows:
        neighbours[a.tail].add(a.head)
        neighbours[a.head].add(a.tail)
    seen = {vertices[0]}
    frontier = [vertices[0]]
    while frontier:
        x = frontier.pop()
        for y in neighbours[x]:
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == len(vertices)


def validate(q: Quiver):
    """
    Raises unless q is a usable quiver: at least one vertex, well-formed incidences and a
    connected underlying graph. Names and incidences are already checked on construction.
    """
    if len(q.vertices) == 0:
        raise QuiverValidationException(f'Quiver {q.name} has no vertices.')
    if not q.is_connected():
        raise DisconnectedQuiverException(f'Quiver {q.name} is not connected.')


def opposite(q: Quiver) -> Quiver:
    name = q.name[:-len('^op')] if q.name.endswith('^op') else f'{q.name}^op'
    return Quiver(q.vertices, tuple(a.reversed() for a in q.arrows), name=name)


@dataclass(frozen=True)
class Path:
    """
    A path in a quiver. `arrows` lists the arrows in the order they are traversed, so the
    path a_n ... a_2 a_1 is stored as (a_1, a_2, ..., a_n). A trivial path has no arrows and
    tail == head.
    """
    tail: str
    head: str
    arrows: Tuple[str, ...] = ()

    def is_trivial(self) -> bool:
        return len(self.arrows) == 0

    def __len__(self):
        return len(self.arrows)

    def __repr__(self):
        if self.is_trivial():
            return f'e_{self.tail}'
        return ''.join(reversed(self.arrows)) if all(len(a) == 1 for a in self.arrows) \
            else '.'.join(reversed(self.arrows))


def trivial_path(q: Quiver, x: str) -> Path:
    q.vertex_index(x)
    return Path(x, x, ())


def path_of(q: Quiver, arrow_names: Sequence[str]) -> Path:
    """The path traversing arrow_names in order; raises if consecutive arrows do not compose."""
    if len(arrow_names) == 0:
        raise PathCompositionException('A path given by arrows needs at least one arrow; use trivial_path().')
    arrows = [q.arrow(a) for a in arrow_names]
    for first, second in zip(arrows, arrows[1:]):
        if first.head != second.tail:
            raise PathCompositionException(f'Arrow {second.name} does not start where {first.name} ends.')
    return Path(arrows[0].tail, arrows[-1].head, tuple(arrow_names))


def compose_paths(p: Path, r: Path) -> Path:
    """The path p after r; r must end where p starts."""
    if r.head != p.tail:
        raise PathCompositionException(f'Cannot compose {p} after {r}: {r} ends at {r.head}, {p} starts at {p.tail}.')
    return Path(r.tail, p.head, r.arrows + p.arrows)
