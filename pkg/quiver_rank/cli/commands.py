import argparse
import logging
import sys
from collections import Counter
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from quiver_rank.cli.reports import CheckReport, DecompositionReport, GammaReport, HomReport, LimitReport, \
    RankCheck, RankReport, RingTableReport, SchurReport, SubquiverReport, SummandReport, TensorReport
from quiver_rank.decompose.class_registry import ClassRegistry, IndecClass, RankDescriptor
from quiver_rank.decompose.decomposition import CANDIDATE_BUDGET, RANDOM_SEED, is_indec
from quiver_rank.decompose.representation_ring import build_rank_table, descriptor_label
from quiver_rank.dsl.document import Document, UnknownNameException
from quiver_rank.dsl.dsl_parser import parse_file
from quiver_rank.dsl.dsl_printer import format_matrix, format_representation
from quiver_rank.errors import DslParseException, QuiverMismatchException, QuiverRankException, UndecidedException
from quiver_rank.linalg.field import Field, GF, QQ
from quiver_rank.linalg.matrix import rank
from quiver_rank.quiver.quiver import Quiver, validate
from quiver_rank.quiver.quiver_morphism import Subquiver, connected_subquivers, full_subquiver, subquiver
from quiver_rank.rank.rank_functors import global_tensor, pushforward_rank, subquiver_rank
from quiver_rank.rep.hom import hom_dim, hom_space
from quiver_rank.rep.limits import limit
from quiver_rank.rep.representation import Representation, exterior, identity_rep, symmetric, tensor
from quiver_rank.utils.string_util import capture, split_names

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_UNDECIDED = 3

SUBQUIVER_DESCRIPTOR = r'([^:]*)(?::(.*))?'


class UsageException(Exception):
    def __init__(self, value='Bad command line.'):
        self.value = value

    def __str__(self):
        return repr(self.value)


class CommandParser(argparse.ArgumentParser):
    """An ArgumentParser that raises on usage errors instead of exiting with status 2."""

    def error(self, message):
        raise UsageException(message)


def build_parser() -> CommandParser:
    common = CommandParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Print the report as JSON.')
    common.add_argument('--budget', type=int, default=CANDIDATE_BUDGET,
                        help='Candidate endomorphisms tried per phase of the splitting search.')
    common.add_argument('--seed', type=int, default=RANDOM_SEED, help='Seed of the random candidate phase.')

    parser = CommandParser(prog='quiver_rank_cli.py FILE', allow_abbrev=False)
    commands = parser.add_subparsers(dest='command', parser_class=CommandParser)
    commands.required = True

    commands.add_parser('check', parents=[common], help='Validate every quiver, representation and morphism.')

    rank_parser = commands.add_parser('rank', parents=[common], help='Global rank, or a subquiver or pushforward rank.')
    rank_parser.add_argument('--rep', required=True)
    via = rank_parser.add_mutually_exclusive_group()
    via.add_argument('--sub', help='A connected subquiver written as "v1,v2:a1,a2".')
    via.add_argument('--via', help='A quiver morphism into the quiver of the representation.')

    gamma_parser = commands.add_parser('gamma', parents=[common], help='Dimension vectors of Delta, Nabla and Gamma.')
    gamma_parser.add_argument('--rep', required=True)
    gamma_parser.add_argument('--show', choices=['delta', 'nabla', 'gamma'])

    tensor_parser = commands.add_parser('tensor', parents=[common], help='Tensor product of two representations.')
    tensor_parser.add_argument('--rep', action='append', required=True)
    tensor_parser.add_argument('--decompose', action='store_true')

    decompose_parser = commands.add_parser('decompose', parents=[common], help='Krull-Schmidt decomposition.')
    decompose_parser.add_argument('--rep', required=True)

    hom_parser = commands.add_parser('hom', parents=[common], help='A basis of the space of morphisms.')
    hom_parser.add_argument('--rep', action='append', required=True)

    schur_parser = commands.add_parser('schur', parents=[common], help='Exterior or symmetric power.')
    schur_parser.add_argument('--rep', required=True)
    schur_parser.add_argument('--op', choices=['ext', 'sym'], required=True)
    schur_parser.add_argument('--k', type=int, required=True)

    limits_parser = commands.add_parser('limits', parents=[common], help='Limit, colimit and the map between them.')
    limits_parser.add_argument('--rep', required=True)

    subquivers_parser = commands.add_parser('subquivers', parents=[common], help='List the connected subquivers.')
    subquivers_parser.add_argument('--quiver', required=True)

    table_parser = commands.add_parser('ringtable', parents=[common], help='Rank functions on indecomposables.')
    table_parser.add_argument('--reps', nargs='+', required=True)
    table_parser.add_argument('--all-subquivers', action='store_true')
    table_parser.add_argument('--via', action='append', default=[])

    return parser


def _two_reps(options, document: Document) -> Tuple[Representation, Representation]:
    if len(options.rep) != 2:
        raise UsageException(f'{options.command} needs exactly two --rep options, got {len(options.rep)}.')
    return document.rep(options.rep[0]), document.rep(options.rep[1])


def _rank_of(v: Representation, descriptor: RankDescriptor) -> int:
    if isinstance(descriptor, Subquiver):
        return subquiver_rank(v, descriptor)
    return pushforward_rank(descriptor, v)


def _function_label(descriptor: RankDescriptor) -> str:
    if isinstance(descriptor, Subquiver) and descriptor == full_subquiver(descriptor.inclusion.target):
        return 'global'
    return descriptor_label(descriptor)


def parse_subquiver(q: Quiver, text: str) -> Subquiver:
    vertices = capture(text, SUBQUIVER_DESCRIPTOR, groupnum=1)
    arrows = capture(text, SUBQUIVER_DESCRIPTOR, groupnum=2) or ''
    return subquiver(q, split_names(vertices), split_names(arrows))


def _registry_for(document: Document, v: Representation, budget: int, seed: int) -> ClassRegistry:
    """A class registry for v's quiver, seeded with the document's indecomposables so summands carry their names."""
    registry = ClassRegistry(v.quiver, v.field, budget=budget, seed=seed)
    for name, w in document.reps.items():
        if w.quiver != v.quiver or w.field != v.field or w.is_zero() or not w.field.is_rational():
            continue
        try:
            if is_indec(w, budget, seed):
                registry.classify(w, label=name)
        except UndecidedException:
            logging.debug(f'Left {name} out of the class registry: its decomposition is undecided.')
    return registry


def _summands(parts: Sequence[IndecClass]) -> List[SummandReport]:
    counts = Counter(parts)
    return [SummandReport(c.label, list(c.dimension_vector), counts[c]) for c in sorted(counts, key=lambda c: c.sort_key)]


def check_command(options, document: Document) -> CheckReport:
    quivers = []
    for name, q in document.quivers.items():
        validate(q)
        shape = ', tree' if q.is_tree() else ''
        quivers.append(f'quiver {name}: {len(q.vertices)} vertices, {len(q.arrows)} arrows{shape}')
    reps = [f'rep {name} over {v.quiver.name}: {list(v.dimension_vector)}' for name, v in document.reps.items()]
    morphisms = [f'morphism {name}: {alpha.source.name} -> {alpha.target.name}'
                 for name, alpha in document.morphisms.items()]
    return CheckReport(quivers, reps, morphisms)


def rank_command(options, document: Document) -> RankReport:
    v = document.rep(options.rep)
    if options.sub is not None:
        descriptor = parse_subquiver(v.quiver, options.sub)
    elif options.via is not None:
        descriptor = document.morphism(options.via)
    else:
        descriptor = full_subquiver(v.quiver)
    return RankReport(options.rep, _function_label(descriptor), _rank_of(v, descriptor))


def gamma_command(options, document: Document) -> GammaReport:
    v = document.rep(options.rep)
    result = global_tensor(v)
    delta = result.from_delta.source
    nabla = result.into_nabla.target
    shown = None
    if options.show is not None:
        shown = format_representation({'delta': delta, 'nabla': nabla, 'gamma': result.gamma}[options.show])
    return GammaReport(options.rep, list(delta.dimension_vector), list(nabla.dimension_vector),
                       list(result.gamma.dimension_vector), result.global_rank, shown)


def tensor_command(options, document: Document) -> TensorReport:
    v, w = _two_reps(options, document)
    product = tensor(v, w)
    report = TensorReport(list(options.rep), list(product.dimension_vector))
    if not options.decompose:
        report.text = format_representation(product)
        return report
    registry = _registry_for(document, v, options.budget, options.seed)
    parts = registry.decompose(product)
    report.summands = _summands(parts)
    descriptors = [full_subquiver(v.quiver)]
    descriptors += [alpha for alpha in document.morphisms.values() if alpha.target == v.quiver]
    report.checks = []
    for descriptor in descriptors:
        check = RankCheck(_function_label(descriptor), _rank_of(product, descriptor),
                          [_rank_of(v, descriptor), _rank_of(w, descriptor)],
                          sum(registry.rank_of(c.id, descriptor) for c in parts))
        if not check.ok:
            logging.warning(f'Rank check {check.function} failed on {product.name}: {check.to_text()}')
        report.checks.append(check)
    return report


def decompose_command(options, document: Document) -> DecompositionReport:
    v = document.rep(options.rep)
    registry = _registry_for(document, v, options.budget, options.seed)
    return DecompositionReport(options.rep, _summands(registry.decompose(v)))


def hom_command(options, document: Document) -> HomReport:
    v, w = _two_reps(options, document)
    basis = hom_space(v, w)
    return HomReport(options.rep[0], options.rep[1], len(basis),
                     [{x: format_matrix(f.comps[x]) for x in v.quiver.vertices} for f in basis])


def schur_command(options, document: Document) -> SchurReport:
    v = document.rep(options.rep)
    if options.k < 0:
        raise UsageException(f'--k must be nonnegative, got {options.k}.')
    r = global_tensor(v).global_rank
    if options.op == 'ext':
        power, expected = exterior(v, options.k), comb(r, options.k)
    else:
        power, expected = symmetric(v, options.k), comb(r + options.k - 1, options.k) if options.k > 0 else 1
    return SchurReport(options.rep, options.op, options.k, list(power.dimension_vector),
                       global_tensor(power).global_rank, expected, format_representation(power))


def limits_command(options, document: Document) -> LimitReport:
    v = document.rep(options.rep)
    data = limit(v)
    one = identity_rep(v.quiver, v.field)
    report = LimitReport(options.rep, data.lim_dim, data.colim_dim, format_matrix(data.eta), rank(data.eta),
                         hom_dim(one, v), hom_dim(v, one))
    if v.quiver.is_tree():
        report.global_rank = global_tensor(v).global_rank
    return report


def subquivers_command(options, document: Document) -> SubquiverReport:
    q = document.quiver(options.quiver)
    return SubquiverReport(options.quiver, [p.descriptor for p in connected_subquivers(q)])


def ringtable_command(options, document: Document) -> RingTableReport:
    reps = [document.rep(name) for name in options.reps]
    first = reps[0]
    for v in reps[1:]:
        if v.quiver != first.quiver:
            raise QuiverMismatchException(f'{v.name} lives over {v.quiver.name}, {first.name} over {first.quiver.name}.')
    registry = ClassRegistry(first.quiver, first.field, budget=options.budget, seed=options.seed)
    classes = []
    for name, v in zip(options.reps, reps):
        if not is_indec(v, options.budget, options.seed):
            raise QuiverRankException(f'{name} is decomposable; rank tables take indecomposables.')
        classes.append(registry.classify(v, label=name))
    descriptors = list(registry.subquivers) if options.all_subquivers else [full_subquiver(first.quiver)]
    descriptors += [document.morphism(name) for name in options.via]
    table = build_rank_table(classes, descriptors, registry)
    square = len(table.row_labels) == len(table.col_labels)
    return RingTableReport(table.row_labels, list(options.reps), table.values, table.rank(),
                           table.determinant() if square else None, table.integer_kernel())


COMMANDS: Dict[str, Callable] = {
    'check': check_command,
    'rank': rank_command,
    'gamma': gamma_command,
    'tensor': tensor_command,
    'decompose': decompose_command,
    'hom': hom_command,
    'schur': schur_command,
    'limits': limits_command,
    'subquivers': subquivers_command,
    'ringtable': ringtable_command,
}


def run(command: str, args: Sequence[str], document: Document) -> Tuple[str, int]:
    """
    Runs one command against a parsed document. Returns the output text and the exit code:
    0 on success, 1 for usage errors and unknown names, 2 when a mathematical precondition
    fails and 3 when a decomposition stays undecided.
    """
    try:
        options = build_parser().parse_args([command] + list(args))
        report = COMMANDS[options.command](options, document)
    except UsageException as e:
        return f'usage error: {e.value}', EXIT_USAGE
    except UnknownNameException as e:
        return f'error: {e}', EXIT_USAGE
    except DslParseException as e:
        return f'error: {e}', EXIT_USAGE
    except UndecidedException as e:
        return f'undecided: {e.value}', EXIT_UNDECIDED
    except QuiverRankException as e:
        return f'error: {e.value}', EXIT_PRECONDITION
    except ValueError as e:
        return f'usage error: {e}', EXIT_USAGE
    if options.json:
        return report.to_json(indent=4), EXIT_OK
    return report.to_text(), EXIT_OK


def field_of(name: str) -> Field:
    if name == 'Q':
        return QQ
    return GF(int(name))


def get_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = CommandParser(description='Exact rank functions and decompositions of quiver representations.',
                           allow_abbrev=False)
    parser.add_argument('file', help='A document of quiver, rep and morphism blocks.')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log debug messages to stderr.')
    parser.add_argument('--field', choices=['Q', '2', '3', '5', '7'], default='Q',
                        help='The field the matrices of the document are read over.')
    parser.add_argument('command', choices=sorted(COMMANDS))
    parser.add_argument('args', nargs=argparse.REMAINDER)
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = get_args(argv)
    except UsageException as e:
        print(f'usage error: {e.value}', file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        document = parse_file(args.file, field_of(args.field))
    except DslParseException as e:
        print(f'{args.file}: {e}', file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE
    text, code = run(args.command, args.args, document)
    print(text, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code
