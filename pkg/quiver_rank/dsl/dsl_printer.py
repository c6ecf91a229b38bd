from typing import Optional

from quiver_rank.dsl.document import Document
from quiver_rank.linalg.matrix import Matrix
from quiver_rank.quiver.quiver import Quiver
from quiver_rank.quiver.quiver_morphism import QuiverMorphism
from quiver_rank.rep.representation import Representation, RepMorphism

INDENT = '    '


def format_matrix(m: Matrix) -> str:
    return repr(m)


def format_dimension_vector(v: Representation) -> str:
    return '(' + ', '.join(str(d) for d in v.dimension_vector) + ')'


def format_quiver(q: Quiver, name: Optional[str] = None) -> str:
    lines = [f'quiver {name or q.name} {{', f"{INDENT}vertices: {' '.join(q.vertices)};"]
    lines += [f'{INDENT}arrow {a.name}: {a.tail} -> {a.head};' for a in q.arrows]
    lines.append('}')
    return '\n'.join(lines)


def format_representation(v: Representation, name: Optional[str] = None) -> str:
    """A rep block; maps touching a zero-dimensional vertex are left out, the parser restores them."""
    lines = [f'rep {name or v.name} over {v.quiver.name} {{']
    lines += [f'{INDENT}dim {x} = {v.dims[x]};' for x in v.quiver.vertices]
    for a in v.quiver.arrows:
        m = v.mats[a.name]
        if m.rows * m.cols != 0:
            lines.append(f'{INDENT}map {a.name} = {format_matrix(m)};')
    lines.append('}')
    return '\n'.join(lines)


def format_morphism(alpha: QuiverMorphism, name: Optional[str] = None) -> str:
    lines = [f'morphism {name or alpha.name}: {alpha.source.name} -> {alpha.target.name} {{']
    lines += [f'{INDENT}vertex {x} -> {alpha.vertex_map[x]};' for x in alpha.source.vertices]
    lines += [f'{INDENT}arrow {a} -> {alpha.arrow_map[a]};' for a in alpha.source.arrow_names]
    lines.append('}')
    return '\n'.join(lines)


def format_rep_morphism(f: RepMorphism) -> str:
    return '\n'.join(f'{x}: {format_matrix(f.comps[x])}' for x in f.quiver.vertices)


def print_document(document: Document) -> str:
    blocks = [format_quiver(q, name) for name, q in document.quivers.items()]
    blocks += [format_representation(v, name) for name, v in document.reps.items()]
    blocks += [format_morphism(alpha, name) for name, alpha in document.morphisms.items()]
    return '\n\n'.join(blocks) + '\n'
