from dataclasses import dataclass, field
from typing import Dict

from quiver_rank.quiver.quiver import Quiver
from quiver_rank.quiver.quiver_morphism import QuiverMorphism
from quiver_rank.rep.representation import Representation


class UnknownNameException(KeyError):
    def __init__(self, kind: str, name: str):
        super().__init__(name)
        self.kind = kind
        self.name = name

    def __str__(self):
        return f'No {self.kind} named {self.name}.'


@dataclass
class Document:
    """Everything declared in one input file, by name and in declaration order."""
    quivers: Dict[str, Quiver] = field(default_factory=dict)
    reps: Dict[str, Representation] = field(default_factory=dict)
    morphisms: Dict[str, QuiverMorphism] = field(default_factory=dict)

    def quiver(self, name: str) -> Quiver:
        if name not in self.quivers:
            raise UnknownNameException('quiver', name)
        return self.quivers[name]

    def rep(self, name: str) -> Representation:
        if name not in self.reps:
            raise UnknownNameException('representation', name)
        return self.reps[name]

    def morphism(self, name: str) -> QuiverMorphism:
        if name not in self.morphisms:
            raise UnknownNameException('morphism', name)
        return self.morphisms[name]

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return list(self.quivers.items()) == list(other.quivers.items()) \
            and list(self.reps.items()) == list(other.reps.items()) \
            and list(self.morphisms.items()) == list(other.morphisms.items())
