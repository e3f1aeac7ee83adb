"""
Algebra service: machines as algebras over an output leg, and the behavior adjunction.
"""
import logging

from fmachina.config import current_config
from fmachina.models.algebra import (
    AlgebraMorphism,
    BijectionReport,
    FAlgebra,
    IntensionalMap,
    SliceLeg,
    SliceMorphism
)
from fmachina.models.machine import FMachine, MachineMorphism
from fmachina.services.base_service import BaseCategoryService
from fmachina.services.behavior_service import BehaviorService
from fmachina.services.limit_service import LimitService
from fmachina.services.machine_service import MachineService
from fmachina.utils.encoding import encode_left, encode_right
from fmachina.utils.errors import (
    IncompatibleMachinesError,
    InvalidMorphismError,
    OracleBoundExceeded,
    StrictnessError
)

log = logging.getLogger(__name__)


def _joint_partition(x, y):
    coproduct = LimitService.machine_coproduct(x.machine, y.machine)
    return BehaviorService.behavior_partition(coproduct.apex)


def _triangle(partition, f):
    return all(partition.block(encode_left(a)) == partition.block(encode_right(f(a))) for a in f.dom.elements)


class AlgebraService:
    """Service class for the algebra/slice decomposition and the B -| L adjunction."""

    @staticmethod
    def decompose(m):
        """
        Split a machine into its F-algebra and its output leg.

        Args:
            m (FMachine): Machine (E, d, s)

        Returns:
            tuple: (FAlgebra (E, d), SliceLeg s)
        """
        return (
            FAlgebra(m.adjunction, m.carrier, m.d),
            SliceLeg(m.flavor, m.adjunction, m.carrier, m.s)
        )

    @staticmethod
    def recompose(algebra, leg):
        """
        Glue an F-algebra and an output leg over the same carrier.

        Args:
            algebra (FAlgebra): (E, d)
            leg (SliceLeg): s

        Returns:
            FMachine: (E, d, s)
        """
        if algebra.adjunction != leg.adjunction:
            raise StrictnessError('Algebra and output leg use different adjunctions')
        if algebra.carrier != leg.carrier:
            raise StrictnessError(
                f'Carriers differ: {list(algebra.carrier.elements)} vs {list(leg.carrier.elements)}'
            )
        return FMachine(leg.flavor, algebra.adjunction, algebra.carrier, leg.output, algebra.structure, leg.morphism)

    @staticmethod
    def algebra_morphism_valid(f, alg1, alg2):
        """
        Check a2 . F f = f . a1 elementwise.

        Args:
            f (BaseMorphism): Carrier map A1 -> A2
            alg1 (FAlgebra): Source algebra
            alg2 (FAlgebra): Target algebra

        Returns:
            bool: True if f is an algebra morphism
        """
        if alg1.adjunction != alg2.adjunction or f.dom != alg1.carrier or f.cod != alg2.carrier:
            return False
        lifted = alg1.adjunction.left.on_morphism(f)
        return all(alg2.structure(lifted(x)) == f(alg1.structure(x)) for x in lifted.dom.elements)

    @staticmethod
    def slice_morphism_valid(f, leg1, leg2):
        """
        Check the slice triangle: leg2 . F f = leg1 (mealy) or leg2 . f = leg1 (moore).

        Args:
            f (BaseMorphism): Carrier map
            leg1 (SliceLeg): Source leg
            leg2 (SliceLeg): Target leg

        Returns:
            bool: True if f is a slice morphism
        """
        if leg1.flavor != leg2.flavor or leg1.adjunction != leg2.adjunction or leg1.output != leg2.output:
            return False
        if f.dom != leg1.carrier or f.cod != leg2.carrier:
            return False
        if leg1.flavor == 'mealy':
            lifted = leg1.adjunction.left.on_morphism(f)
            return all(leg2.morphism(lifted(x)) == leg1.morphism(x) for x in lifted.dom.elements)
        return all(leg2.morphism(f(e)) == leg1.morphism(e) for e in f.dom.elements)

    @staticmethod
    def split_morphism(h):
        """Send a machine morphism to its (algebra morphism, slice morphism) pair."""
        MachineService.ensure_morphism(h)
        src_algebra, src_leg = AlgebraService.decompose(h.src)
        dst_algebra, dst_leg = AlgebraService.decompose(h.dst)
        return AlgebraMorphism(src_algebra, dst_algebra, h.f), SliceMorphism(src_leg, dst_leg, h.f)

    @staticmethod
    def join_morphism(algebra_morphism, slice_morphism):
        """
        Glue an algebra morphism and a slice morphism with the same carrier map.

        Args:
            algebra_morphism (AlgebraMorphism): (E, d) -> (E', d')
            slice_morphism (SliceMorphism): s -> s'

        Returns:
            MachineMorphism: The machine morphism they determine
        """
        if algebra_morphism.f != slice_morphism.f:
            raise StrictnessError('Algebra and slice morphisms have different carrier maps')
        f = algebra_morphism.f
        if not AlgebraService.algebra_morphism_valid(f, algebra_morphism.src, algebra_morphism.dst):
            raise InvalidMorphismError('Carrier map is not an algebra morphism')
        if not AlgebraService.slice_morphism_valid(f, slice_morphism.src, slice_morphism.dst):
            raise InvalidMorphismError('Carrier map is not a slice morphism')
        src = AlgebraService.recompose(algebra_morphism.src, slice_morphism.src)
        dst = AlgebraService.recompose(algebra_morphism.dst, slice_morphism.dst)
        return MachineMorphism(src, dst, f)

    @staticmethod
    def functor_B(m):
        """
        The behavior functor on objects: a Moore machine as the map u_E into O_inf.

        Args:
            m (FMachine): Moore machine

        Returns:
            IntensionalMap: The intensional behavior map
        """
        if m.flavor != 'moore':
            raise IncompatibleMachinesError('The behavior functor is defined on Moore machines')
        return IntensionalMap(m)

    @staticmethod
    def triangle_commutes(f, x, y):
        """
        Decide u_y . f = u_x: every a is behavior-equivalent to f(a).

        Args:
            f (BaseMorphism): Carrier map between the two machines
            x (IntensionalMap): Source
            y (IntensionalMap): Target

        Returns:
            bool: True if the behavior triangle commutes
        """
        return _triangle(_joint_partition(x, y), f)

    @staticmethod
    def functor_B_morphism(h):
        """
        The behavior functor on morphisms, the identity on carrier maps.

        Args:
            h (MachineMorphism): Moore machine morphism

        Returns:
            AlgebraMorphism: The same carrier map between the underlying algebras
        """
        MachineService.ensure_morphism(h)
        x, y = AlgebraService.functor_B(h.src), AlgebraService.functor_B(h.dst)
        if not AlgebraService.triangle_commutes(h.f, x, y):
            raise InvalidMorphismError('Behavior triangle does not commute')
        return AlgebraMorphism(x.algebra, y.algebra, h.f)

    @staticmethod
    def functor_L(x):
        """
        The left adjoint: (A, a) with u read back as the Moore machine (A, a, s).

        Args:
            x (IntensionalMap): Behavior map u : A -> O_inf

        Returns:
            FMachine: Moore machine whose output is the depth-0 component of u
        """
        algebra = x.algebra
        leg = SliceLeg('moore', algebra.adjunction, algebra.carrier, x.machine.s)
        return AlgebraService.recompose(algebra, leg)

    @staticmethod
    def slice_homset(x, y, bound=None):
        """
        Algebra morphisms x -> y whose behavior triangle commutes.

        Args:
            x (IntensionalMap): Source
            y (IntensionalMap): Target
            bound (int): Maximum number of candidate carrier maps

        Returns:
            list: Carrier maps as BaseMorphism values
        """
        partition = _joint_partition(x, y)
        return [
            f
            for f in BaseCategoryService.enumerate_hom(x.carrier, y.carrier, bound)
            if AlgebraService.algebra_morphism_valid(f, x.algebra, y.algebra)
            and _triangle(partition, f)
        ]

    @staticmethod
    def homset_bijection_check(x, m, bound=None, naturality=()):
        """
        Compare Hom(L x, m) with Hom(x, B m) through the explicit transports.

        Args:
            x (IntensionalMap): Behavior map
            m (FMachine): Moore machine
            bound (int): Largest carrier allowed, ORACLE_BOUND by default
            naturality (Sequence[MachineMorphism]): Morphisms g : m -> m' to check naturality along

        Returns:
            BijectionReport: Both hom-sets, the transported tables and naturality squares
        """
        bound = current_config().ORACLE_BOUND if bound is None else bound
        for machine in (x.machine, m):
            if machine.size > bound:
                raise OracleBoundExceeded(
                    f'A carrier of {machine.size} states exceeds the oracle bound',
                    size=machine.size, bound=bound
                )
        source = AlgebraService.functor_L(x)
        target = AlgebraService.functor_B(m)
        left = MachineService.enumerate_morphisms(source, m)
        right = AlgebraService.slice_homset(x, target)

        right_tables = {f.table for f in right}
        forward = tuple(h.f.table for h in left if h.f.table in right_tables)
        backward = tuple(
            f.table for f in right
            if MachineService.is_morphism(MachineMorphism(source, m, f))
        )
        squares = tuple(
            AlgebraService.naturality_check(x, g, left)
            for g in naturality
        )
        log.debug('Hom-set sizes %d and %d', len(left), len(right))
        return BijectionReport(
            tuple(h.f.table for h in left),
            tuple(f.table for f in right),
            forward,
            backward,
            squares
        )

    @staticmethod
    def naturality_check(x, g, morphisms=None):
        """
        Check that transporting g . h equals g applied after transporting h.

        Args:
            x (IntensionalMap): Behavior map
            g (MachineMorphism): m -> m'
            morphisms (list): Machine morphisms L x -> m, enumerated when omitted

        Returns:
            dict: target states, number of squares and the verdict
        """
        MachineService.ensure_morphism(g)
        source = AlgebraService.functor_L(x)
        if morphisms is None:
            morphisms = MachineService.enumerate_morphisms(source, g.src)
        target = AlgebraService.functor_B(g.dst)
        allowed = {f.table for f in AlgebraService.slice_homset(x, target)}
        ok = True
        for h in morphisms:
            composite = MachineService.compose_morphisms(g, h)
            transported = BaseCategoryService.compose(g.f, h.f)
            if composite.f != transported or transported.table not in allowed:
                ok = False
        return {'target': list(g.dst.states), 'squares': len(morphisms), 'ok': ok}
