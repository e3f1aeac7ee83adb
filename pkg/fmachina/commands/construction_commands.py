"""
Commands building limits and colimits of machines and checking their universal properties.
"""
import os

import click

from fmachina.commands import CommandSet, emit, machine_file, write_document
from fmachina.services.document_service import DocumentService
from fmachina.services.limit_service import LimitService

bp = CommandSet('constructions')

ARITY = {
    'product': 2,
    'coproduct': 2,
    'initial': 1,
    'equalizer': 3,
    'coequalizer': 3,
    'pullback': 5
}


def _parallel_pair(path, first, second):
    m = DocumentService.load(path)
    h1 = DocumentService.load_morphism(first, m)
    h2 = DocumentService.load_morphism(second, m, h1.dst)
    return (m, h1.dst), h1, h2


def _construct(kind, paths):
    """
    Build a construction from its files.

    Returns:
        tuple: (MachineCone, named machines taken from the machine documents)
    """
    if kind in ('product', 'coproduct'):
        machines = [DocumentService.load(path) for path in paths]
        build = LimitService.machine_product if kind == 'product' else LimitService.machine_coproduct
        cone = build(*machines)
        documents = list(zip(paths, machines))
    elif kind == 'initial':
        m = DocumentService.load(paths[0])
        cone = LimitService.machine_initial(m.adjunction, m.output, m.flavor)
        documents = [(paths[0], m)]
    elif kind in ('equalizer', 'coequalizer'):
        (m, target), h1, h2 = _parallel_pair(*paths)
        build = LimitService.machine_equalizer if kind == 'equalizer' else LimitService.machine_coequalizer
        cone = build(h1, h2)
        documents = [(paths[0], m)] if target == m else [(paths[0], m), ('target', target)]
    else:
        first, second, target = (DocumentService.load(path) for path in paths[:3])
        h1 = DocumentService.load_morphism(paths[3], first, target)
        h2 = DocumentService.load_morphism(paths[4], second, target)
        cone = LimitService.machine_pullback(h1, h2)
        documents = list(zip(paths[:3], (first, second, target)))
    named = [(os.path.basename(path), machine) for path, machine in documents]
    return cone, named


def _cone_report(cone):
    return {
        'kind': cone.kind,
        'states': list(cone.apex.states),
        'legs': [leg.to_dict() for leg in cone.legs],
        'document': DocumentService.to_document(cone.apex)
    }


def _build(kind, paths, out):
    cone, _ = _construct(kind, paths)
    write_document(out, cone.apex)
    emit(f'{kind.capitalize()} constructed', _cone_report(cone))


output_option = click.option(
    '-o', '--output', 'out', type=click.Path(dir_okay=False), help='Write the apex machine here'
)


@bp.command('product')
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@output_option
def product(first, second, out):
    """Binary product: pairs of behavior-equivalent states."""
    _build('product', (first, second), out)


@bp.command('coproduct')
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@output_option
def coproduct(first, second, out):
    """Binary coproduct: the disjoint union of the carriers."""
    _build('coproduct', (first, second), out)


@bp.command('equalizer')
@click.argument('path', type=machine_file())
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@output_option
def equalizer(path, first, second, out):
    """Equalizer of two morphisms out of the machine in PATH."""
    _build('equalizer', (path, first, second), out)


@bp.command('coequalizer')
@click.argument('path', type=machine_file())
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@output_option
def coequalizer(path, first, second, out):
    """Coequalizer of two morphisms out of the machine in PATH."""
    _build('coequalizer', (path, first, second), out)


@bp.command('pullback')
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@click.argument('target', type=machine_file())
@click.argument('left', type=machine_file())
@click.argument('right', type=machine_file())
@output_option
def pullback(first, second, target, left, right, out):
    """Pullback of LEFT : FIRST -> TARGET and RIGHT : SECOND -> TARGET."""
    _build('pullback', (first, second, target, left, right), out)


@bp.command('check-universal')
@click.argument('kind', type=click.Choice(sorted(ARITY)))
@click.argument('paths', nargs=-1, required=True, type=machine_file())
@click.option('--bound', type=click.IntRange(min=0), help='Largest carrier the oracle accepts')
def check_universal(kind, paths, bound):
    """
    Count mediating morphisms into (or out of) a construction.

    Files follow the construction's own command: two machines for product and
    coproduct, one machine for initial, a machine and two morphism files for
    equalizer and coequalizer, three machines and two morphism files for pullback.
    """
    if len(paths) != ARITY[kind]:
        raise click.UsageError(f'{kind} takes {ARITY[kind]} files, got {len(paths)}')
    cone, named = _construct(kind, paths)
    report = LimitService.check_universal(kind, cone, bound=bound, competitors=named)
    emit(
        'Universal property holds' if report.ok else 'Universal property fails',
        report.to_dict(),
        ok=report.ok
    )
