"""
Commands on single machines: validation, runs, behavior and minimization.
"""
import click

from fmachina.commands import CommandSet, emit, machine_file, write_document
from fmachina.models.machine import Word
from fmachina.services.behavior_service import BehaviorService
from fmachina.services.document_service import DocumentService
from fmachina.services.machine_service import MachineService

bp = CommandSet('machines')


@bp.command('validate')
@click.argument('path', type=machine_file())
def validate(path):
    """Parse a machine document and check every invariant."""
    m = DocumentService.load(path)
    emit('Machine is valid', {
        'adjunction': m.adjunction.kind,
        'flavor': m.flavor,
        'states': list(m.states),
        'context_size': m.context.size
    })


@bp.command('run')
@click.argument('path', type=machine_file())
@click.option('--state', required=True, help='Start state')
@click.option('--word', required=True, help='Comma separated input symbols')
def run(path, state, word):
    """Run a classical machine on a word."""
    m = DocumentService.load(path)
    result = MachineService.run_word(m, state, Word.parse(word))
    emit('Word processed', result.to_dict())


@bp.command('behavior')
@click.argument('path', type=machine_file())
@click.option('--depth', required=True, type=click.IntRange(min=0), help='Largest mate index N')
def behavior(path, depth):
    """
    Print the mates up to depth N and the behavior partition.

    Mealy machines start at the first mate, so they need N >= 1.
    """
    m = DocumentService.load(path)
    truncated = BehaviorService.truncated_behavior(m, depth)
    data = truncated.to_dict()
    data['refinement'] = BehaviorService.refine(m).to_dict()
    emit('Behavior computed', data)


@bp.command('minimize')
@click.argument('path', type=machine_file())
@click.option('-o', '--output', 'out', type=click.Path(dir_okay=False), help='Write the minimal machine here')
def minimize(path, out):
    """Quotient a machine by behavior equivalence."""
    m = DocumentService.load(path)
    minimal, quotient = BehaviorService.minimize(m)
    write_document(out, minimal)
    emit('Machine minimized', {
        'states': list(minimal.states),
        'quotient': quotient.to_dict(),
        'document': DocumentService.to_document(minimal)
    })


@bp.command('equivalent')
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@click.option('--states', required=True, help='S1,S2: a state of each machine')
def equivalent(first, second, states):
    """Decide whether two states have the same behavior."""
    pair = [state.strip() for state in states.split(',')]
    if len(pair) != 2:
        raise click.BadParameter('expected exactly two states, S1,S2', param_hint='--states')
    m1, m2 = DocumentService.load(first), DocumentService.load(second)
    result = BehaviorService.equivalence(m1, m2, pair[0], pair[1])
    result['states'] = pair
    emit(
        'States are equivalent' if result['equivalent'] else 'States are separated',
        result,
        ok=result['equivalent']
    )


@bp.command('check-morphism')
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@click.argument('morphism', type=machine_file())
def check_morphism(first, second, morphism):
    """Check that a state mapping from FIRST to SECOND is a machine morphism."""
    m1, m2 = DocumentService.load(first), DocumentService.load(second)
    h = DocumentService.load_morphism(morphism, m1, m2)
    report = MachineService.validate_morphism(h)
    emit(
        'Mapping is a machine morphism' if report.ok else 'Mapping is not a machine morphism',
        report.to_dict(),
        ok=report.ok
    )
