from dataclasses import dataclass
from typing import Dict, List, Optional

from dataclasses_json import dataclass_json


def _vector(values: List[int]) -> str:
    return '(' + ', '.join(str(v) for v in values) + ')'


@dataclass_json
@dataclass
class CheckReport:
    quivers: List[str]
    reps: List[str]
    morphisms: List[str]

    def to_text(self) -> str:
        return '\n'.join(['ok'] + self.quivers + self.reps + self.morphisms)


@dataclass_json
@dataclass
class RankReport:
    rep: str
    function: str # 'global', a subquiver 'v1,v2:a1' or a pushforward 'alpha_*'
    value: int

    def to_text(self) -> str:
        return str(self.value)


@dataclass_json
@dataclass
class GammaReport:
    rep: str
    delta: List[int]
    nabla: List[int]
    gamma: List[int]
    global_rank: int
    shown: Optional[str] = None # DSL text of the representation asked for with --show

    def to_text(self) -> str:
        lines = [f'delta: {_vector(self.delta)}', f'nabla: {_vector(self.nabla)}',
                 f'gamma: {_vector(self.gamma)}', f'global rank: {self.global_rank}']
        if self.shown is not None:
            lines.append(self.shown)
        return '\n'.join(lines)


@dataclass_json
@dataclass
class SummandReport:
    label: str
    dimension_vector: List[int]
    multiplicity: int

    def to_text(self) -> str:
        return f'{self.multiplicity} x {self.label} {_vector(self.dimension_vector)}'


@dataclass_json
@dataclass
class DecompositionReport:
    rep: str
    summands: List[SummandReport]

    def to_text(self) -> str:
        return '\n'.join(s.to_text() for s in self.summands)


@dataclass_json
@dataclass
class RankCheck:
    function: str
    value: int # rank of the tensor product
    factors: List[int] # ranks of the two factors
    summands: int # sum of the ranks of the summands

    @property
    def ok(self) -> bool:
        return self.value == self.factors[0] * self.factors[1] == self.summands

    def to_text(self) -> str:
        verdict = 'ok' if self.ok else 'MISMATCH'
        return f'{self.function}: {self.value} = {self.factors[0]} * {self.factors[1]}, ' \
               f'summands give {self.summands} [{verdict}]'


@dataclass_json
@dataclass
class TensorReport:
    reps: List[str]
    dimension_vector: List[int]
    text: Optional[str] = None
    summands: Optional[List[SummandReport]] = None
    checks: Optional[List[RankCheck]] = None

    def to_text(self) -> str:
        if self.summands is None:
            return self.text
        lines = [s.to_text() for s in self.summands]
        lines += [c.to_text() for c in self.checks]
        return '\n'.join(lines)


@dataclass_json
@dataclass
class HomReport:
    source: str
    target: str
    dimension: int
    basis: List[Dict[str, str]] # vertex -> matrix text, one entry per basis morphism

    def to_text(self) -> str:
        lines = [f'dim Hom({self.source}, {self.target}) = {self.dimension}']
        for i, morphism in enumerate(self.basis):
            lines.append(f'f{i}: ' + '; '.join(f'{x} = {m}' for x, m in morphism.items()))
        return '\n'.join(lines)


@dataclass_json
@dataclass
class SchurReport:
    rep: str
    op: str
    k: int
    dimension_vector: List[int]
    global_rank: int
    expected_rank: int # binomial coefficient in the global rank of the input
    text: str

    def to_text(self) -> str:
        return '\n'.join([self.text, f'global rank: {self.global_rank} (expected {self.expected_rank})'])


@dataclass_json
@dataclass
class LimitReport:
    rep: str
    lim_dim: int
    colim_dim: int
    eta: str
    eta_rank: int
    hom_from_identity: int
    hom_to_identity: int
    global_rank: Optional[int] = None # only reported on trees, where it equals eta_rank

    def to_text(self) -> str:
        lines = [f'lim: {self.lim_dim} (Hom(1, V): {self.hom_from_identity})',
                 f'colim: {self.colim_dim} (Hom(V, 1): {self.hom_to_identity})',
                 f'eta: {self.eta}', f'rank eta: {self.eta_rank}']
        if self.global_rank is not None:
            lines.append(f'global rank: {self.global_rank}')
        return '\n'.join(lines)


@dataclass_json
@dataclass
class SubquiverReport:
    quiver: str
    subquivers: List[str]

    def to_text(self) -> str:
        return '\n'.join([f'{len(self.subquivers)} connected subquivers'] + self.subquivers)


@dataclass_json
@dataclass
class RingTableReport:
    rows: List[str]
    columns: List[str]
    values: List[List[int]]
    rank: int
    determinant: Optional[int]
    kernel: List[List[int]]

    def to_text(self) -> str:
        width = max([len(r) for r in self.rows] + [1])
        lines = [' ' * width + ' | ' + ' '.join(self.columns)]
        for label, row in zip(self.rows, self.values):
            lines.append(label.ljust(width) + ' | ' + ' '.join(str(v).rjust(len(c)) for v, c in zip(row, self.columns)))
        lines.append(f'rank: {self.rank}')
        if self.determinant is not None:
            lines.append(f'determinant: {self.determinant}')
        for vector in self.kernel:
            lines.append(f'kernel: {_vector(vector)}')
        return '\n'.join(lines)
