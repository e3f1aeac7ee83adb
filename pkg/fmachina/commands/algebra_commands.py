"""
Commands for the algebra/slice decomposition and the behavior adjunction.
"""
import click

from fmachina.commands import CommandSet, emit, machine_file
from fmachina.services.algebra_service import AlgebraService
from fmachina.services.behavior_service import BehaviorService
from fmachina.services.document_service import DocumentService
from fmachina.services.machine_service import MachineService

bp = CommandSet('algebras')


@bp.command('decompose')
@click.argument('path', type=machine_file())
def decompose(path):
    """Split a machine into its F-algebra and output leg, then glue them back."""
    m = DocumentService.load(path)
    algebra, leg = AlgebraService.decompose(m)
    glued = AlgebraService.recompose(algebra, leg)
    roundtrip = DocumentService.serialize(glued) == DocumentService.serialize(m)
    emit('Machine decomposed', {
        'algebra': algebra.to_dict(),
        'leg': leg.to_dict(),
        'roundtrip': roundtrip
    }, ok=roundtrip)


@bp.command('check-adjunction')
@click.argument('first', type=machine_file())
@click.argument('second', type=machine_file())
@click.option('--bound', type=click.IntRange(min=0), help='Largest carrier the check accepts')
def check_adjunction(first, second, bound):
    """
    Compare Hom(L x, m) with Hom(x, B m) for x = B(FIRST) and m = SECOND.

    Naturality is checked along the identity of SECOND and its minimization.
    """
    x = AlgebraService.functor_B(DocumentService.load(first))
    m = DocumentService.load(second)
    _, quotient = BehaviorService.minimize(m)
    report = AlgebraService.homset_bijection_check(
        x, m, bound=bound, naturality=(MachineService.identity_morphism(m), quotient)
    )
    emit(
        'Hom-sets correspond' if report.ok else 'Hom-sets do not correspond',
        report.to_dict(),
        ok=report.ok
    )
