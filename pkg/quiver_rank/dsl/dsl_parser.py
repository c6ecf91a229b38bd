from dataclasses import dataclass
from typing import List, Tuple

import lark
from lark import Token

from quiver_rank.dsl.document import Document
from quiver_rank.errors import DimensionMismatchException, DslParseException, MorphismValidationException, \
    QuiverValidationException
from quiver_rank.linalg.field import Field, QQ
from quiver_rank.linalg.matrix import Matrix
from quiver_rank.quiver.quiver import Arrow, Quiver
from quiver_rank.quiver.quiver_morphism import QuiverMorphism, validate_morphism
from quiver_rank.rep.representation import Representation

GRAMMAR = r"""
start: block*

?block: quiver_block | rep_block | morphism_block

quiver_block: "quiver" NAME "{" vertices_stmt arrow_stmt* "}"
vertices_stmt: "vertices" ":" NAME* ";"
arrow_stmt: "arrow" NAME ":" NAME "->" NAME ";"

rep_block: "rep" NAME "over" NAME "{" rep_stmt* "}"
?rep_stmt: dim_stmt | map_stmt
dim_stmt: "dim" NAME "=" NAT ";"
map_stmt: "map" NAME "=" matrix ";"
matrix: "[" (row ("," row)*)? "]"
row: "[" (RATIONAL ("," RATIONAL)*)? "]"

morphism_block: "morphism" NAME ":" NAME "->" NAME "{" morph_stmt* "}"
?morph_stmt: vertex_map | arrow_map
vertex_map: "vertex" NAME "->" NAME ";"
arrow_map: "arrow" NAME "->" NAME ";"

NAME: /[A-Za-z0-9_][A-Za-z0-9_']*/
NAT: /[0-9]+/
RATIONAL: /[+-]?[0-9]+(\/[0-9]+)?/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
""".strip()


# Syntax classes, still carrying their tokens for error positions.

@dataclass
class QuiverDecl:
    name: Token
    vertices: List[Token]
    arrows: List[Tuple[Token, Token, Token]]


@dataclass
class DimStmt:
    vertex: Token
    value: Token


@dataclass
class MapStmt:
    arrow: Token
    rows: List[List[Token]]


@dataclass
class RepDecl:
    name: Token
    quiver: Token
    statements: list


@dataclass
class MorphismDecl:
    name: Token
    source: Token
    target: Token
    vertex_pairs: List[Tuple[Token, Token]]
    arrow_pairs: List[Tuple[Token, Token]]


class ConstructSyntax(lark.Transformer):
    def start(self, blocks):
        return blocks

    def quiver_block(self, args):
        name, vertices, *arrows = args
        return QuiverDecl(name, vertices, arrows)

    def vertices_stmt(self, names):
        return list(names)

    def arrow_stmt(self, args):
        return tuple(args)

    def rep_block(self, args):
        name, quiver, *statements = args
        return RepDecl(name, quiver, statements)

    def dim_stmt(self, args):
        return DimStmt(*args)

    def map_stmt(self, args):
        arrow, rows = args
        return MapStmt(arrow, rows)

    def matrix(self, rows):
        return list(rows)

    def row(self, entries):
        return list(entries)

    def morphism_block(self, args):
        name, source, target, *pairs = args
        vertex_pairs = [p[1:] for p in pairs if p[0] == 'vertex']
        arrow_pairs = [p[1:] for p in pairs if p[0] == 'arrow']
        return MorphismDecl(name, source, target, vertex_pairs, arrow_pairs)

    def vertex_map(self, args):
        return ('vertex',) + tuple(args)

    def arrow_map(self, args):
        return ('arrow',) + tuple(args)


_parser = lark.Lark(GRAMMAR, parser='lalr', lexer='contextual', propagate_positions=True)


def _error(message: str, token: Token) -> DslParseException:
    return DslParseException(message, getattr(token, 'line', 0) or 0, getattr(token, 'column', 0) or 0)


def _build_quiver(decl: QuiverDecl) -> Quiver:
    seen = set()
    for v in decl.vertices:
        if str(v) in seen:
            raise _error(f'Vertex {v} is declared twice in quiver {decl.name}.', v)
        seen.add(str(v))
    arrow_names = set()
    arrows = []
    for name, tail, head in decl.arrows:
        if str(name) in arrow_names:
            raise _error(f'Arrow {name} is declared twice in quiver {decl.name}.', name)
        for end in (tail, head):
            if str(end) not in seen:
                raise _error(f'Arrow {name} ends at undeclared vertex {end}.', end)
        arrow_names.add(str(name))
        arrows.append(Arrow(str(name), str(tail), str(head)))
    try:
        return Quiver(tuple(str(v) for v in decl.vertices), tuple(arrows), name=str(decl.name))
    except QuiverValidationException as e:
        raise _error(e.value, decl.name)


def _build_rep(decl: RepDecl, document: Document, field: Field) -> Representation:
    if str(decl.quiver) not in document.quivers:
        raise _error(f'Representation {decl.name} refers to unknown quiver {decl.quiver}.', decl.quiver)
    q = document.quivers[str(decl.quiver)]
    dims = {x: 0 for x in q.vertices}
    dim_seen = set()
    for statement in decl.statements:
        if isinstance(statement, DimStmt):
            x = str(statement.vertex)
            if not q.has_vertex(x):
                raise _error(f'Quiver {q.name} has no vertex {x}.', statement.vertex)
            if x in dim_seen:
                raise _error(f'Dimension at vertex {x} of {decl.name} is given twice.', statement.vertex)
            dim_seen.add(x)
            dims[x] = int(statement.value)
    mats = {}
    for statement in decl.statements:
        if isinstance(statement, MapStmt):
            a = str(statement.arrow)
            if not q.has_arrow(a):
                raise _error(f'Quiver {q.name} has no arrow {a}.', statement.arrow)
            if a in mats:
                raise _error(f'Map for arrow {a} of {decl.name} is given twice.', statement.arrow)
            arrow = q.arrow(a)
            rows, cols = dims[arrow.head], dims[arrow.tail]
            if len(statement.rows) != rows or any(len(row) != cols for row in statement.rows):
                shape = f'{len(statement.rows)}x{len(statement.rows[0]) if statement.rows else cols}'
                raise _error(f'Map for arrow {a} of {decl.name} must be {rows}x{cols}, got {shape}.', statement.arrow)
            try:
                entries = [[field.parse(str(entry)) for entry in row] for row in statement.rows]
            except (ValueError, ZeroDivisionError) as e:
                raise _error(f'Bad number in map for arrow {a}: {e}', statement.arrow)
            mats[a] = Matrix.from_rows(entries, field, cols=cols)
    for arrow in q.arrows:
        if arrow.name not in mats:
            rows, cols = dims[arrow.head], dims[arrow.tail]
            if rows * cols != 0:
                raise _error(f'Representation {decl.name} has no map for arrow {arrow.name}, '
                             f'which needs a {rows}x{cols} matrix.', decl.name)
            mats[arrow.name] = Matrix.zeros(field, rows, cols)
    try:
        return Representation(q, dims, mats, field, str(decl.name))
    except DimensionMismatchException as e:
        raise _error(e.value, decl.name)


def _build_morphism(decl: MorphismDecl, document: Document) -> QuiverMorphism:
    for token in (decl.source, decl.target):
        if str(token) not in document.quivers:
            raise _error(f'Morphism {decl.name} refers to unknown quiver {token}.', token)
    vertex_map, arrow_map = {}, {}
    for pairs, mapping, kind in ((decl.vertex_pairs, vertex_map, 'vertex'), (decl.arrow_pairs, arrow_map, 'arrow')):
        for source_name, target_name in pairs:
            if str(source_name) in mapping:
                raise _error(f'Morphism {decl.name} maps {kind} {source_name} twice.', source_name)
            mapping[str(source_name)] = str(target_name)
    alpha = QuiverMorphism(document.quivers[str(decl.source)], document.quivers[str(decl.target)],
                           vertex_map, arrow_map, name=str(decl.name))
    try:
        validate_morphism(alpha)
    except MorphismValidationException as e:
        raise _error(e.value, decl.name)
    return alpha


def parse(text: str, field: Field = QQ) -> Document:
    """
    Parses a document of quiver, rep and morphism blocks. Every error, syntactic or semantic,
    is raised as a DslParseException carrying the line and column it refers to.
    """
    try:
        tree = _parser.parse(text)
    except lark.exceptions.UnexpectedInput as e:
        raise DslParseException(f'Unexpected input: {str(e).splitlines()[0]}', max(e.line, 0), max(e.column, 0))
    blocks = ConstructSyntax().transform(tree)
    document = Document()
    for block in blocks:
        if str(block.name) in _names_of_kind(document, block):
            raise _error(f'{type(block).__name__[:-len("Decl")].lower()} {block.name} is declared twice.', block.name)
        if isinstance(block, QuiverDecl):
            document.quivers[str(block.name)] = _build_quiver(block)
        elif isinstance(block, RepDecl):
            document.reps[str(block.name)] = _build_rep(block, document, field)
        else:
            document.morphisms[str(block.name)] = _build_morphism(block, document)
    return document


def _names_of_kind(document: Document, block) -> dict:
    if isinstance(block, QuiverDecl):
        return document.quivers
    if isinstance(block, RepDecl):
        return document.reps
    return document.morphisms


def parse_file(path: str, field: Field = QQ) -> Document:
    with open(path, encoding='utf-8') as f:
        return parse(f.read(), field)
