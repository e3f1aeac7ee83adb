"""
Limit service: limits and colimits of machines and the universal-property oracle.

Colimits and connected limits are computed on carriers in the base category;
binary products are the pullback of the two behavior quotients.
"""
import logging
from collections import Counter

from fmachina.config import current_config
from fmachina.models.base import BaseMorphism
from fmachina.models.limits import ConeReport, MachineCone
from fmachina.models.machine import FMachine, MachineMorphism
from fmachina.services.base_service import BaseCategoryService
from fmachina.services.behavior_service import BehaviorService
from fmachina.services.machine_service import MachineService
from fmachina.utils.errors import DiagramError, InternalInvariantError, OracleBoundExceeded

log = logging.getLogger(__name__)


def _ensure_parallel(h1, h2):
    if h1.src != h2.src or h1.dst != h2.dst:
        raise DiagramError('Expected a parallel pair of machine morphisms')
    MachineService.ensure_morphism(h1)
    MachineService.ensure_morphism(h2)


def _paired_machine(m1, m2, apex, left, right):
    """Machine on a subobject of E x T whose legs are the given projections."""
    compose = BaseCategoryService.compose
    functor = m1.adjunction.left
    cone = BaseCategoryService.product([m1.carrier, m2.carrier])
    inclusion = BaseCategoryService.tuple_into_product(cone, [left, right])
    lifted_left, lifted_right = functor.on_morphism(left), functor.on_morphism(right)
    d = BaseCategoryService.factor_through_mono(
        inclusion,
        BaseCategoryService.tuple_into_product(
            cone, [compose(m1.d, lifted_left), compose(m2.d, lifted_right)]
        )
    )
    if m1.flavor == 'mealy':
        s, other = compose(m1.s, lifted_left), compose(m2.s, lifted_right)
    else:
        s, other = compose(m1.s, left), compose(m2.s, right)
    if s != other:
        raise InternalInvariantError('Output maps disagree on the paired carrier')
    return FMachine(m1.flavor, m1.adjunction, apex, m1.output, d, s)


class LimitService:
    """Service class for limits and colimits in the machine categories."""

    @staticmethod
    def machine_coproduct(m1, m2):
        """
        Coproduct E + T with structure maps read through F(E+T) = FE + FT.

        Args:
            m1 (FMachine): First summand
            m2 (FMachine): Second summand

        Returns:
            MachineCone: Apex with the injections
        """
        MachineService.ensure_compatible(m1, m2)
        compose = BaseCategoryService.compose
        functor = m1.adjunction.left
        cocone = BaseCategoryService.base_colimit('coproduct', (m1.carrier, m2.carrier))
        inl, inr = cocone.legs
        contexts = BaseCategoryService.base_colimit('coproduct', (m1.context, m2.context))
        comparison = BaseCategoryService.copair(
            contexts, [functor.on_morphism(inl), functor.on_morphism(inr)]
        )
        split = BaseCategoryService.invert(comparison)
        d = compose(BaseCategoryService.copair(contexts, [compose(inl, m1.d), compose(inr, m2.d)]), split)
        if m1.flavor == 'mealy':
            s = compose(BaseCategoryService.copair(contexts, [m1.s, m2.s]), split)
        else:
            s = BaseCategoryService.copair(cocone, [m1.s, m2.s])
        apex = FMachine(m1.flavor, m1.adjunction, cocone.apex, m1.output, d, s)
        legs = (MachineMorphism(m1, apex, inl), MachineMorphism(m2, apex, inr))
        return MachineCone('coproduct', apex, legs, (m1, m2))

    @staticmethod
    def machine_coequalizer(h1, h2):
        """
        Coequalizer of a parallel pair, computed on carriers.

        Args:
            h1 (MachineMorphism): First morphism
            h2 (MachineMorphism): Second morphism

        Returns:
            MachineCone: Apex with the quotient map
        """
        _ensure_parallel(h1, h2)
        quotient = BaseCategoryService.base_colimit('coequalizer', (h1.f, h2.f)).legs[0]
        apex = MachineService.quotient_machine(h1.dst, quotient)
        return MachineCone('coequalizer', apex, (MachineMorphism(h1.dst, apex, quotient),), (h1, h2))

    @staticmethod
    def machine_initial(adjunction, output, flavor):
        """
        The machine on the empty carrier.

        Args:
            adjunction (AdjunctionValue): F -| R
            output (BaseObject): Output object O
            flavor (str): mealy or moore

        Returns:
            MachineCone: Initial apex with no legs
        """
        carrier = adjunction.base.initial()
        context = adjunction.left.on_object(carrier)
        if context.size:
            raise InternalInvariantError('F does not preserve the empty object')
        d = BaseMorphism(context, carrier, ())
        s = BaseMorphism(context if flavor == 'mealy' else carrier, output, ())
        apex = FMachine(flavor, adjunction, carrier, output, d, s)
        return MachineCone('initial', apex, ())

    @staticmethod
    def machine_equalizer(h1, h2):
        """
        Equalizer of a parallel pair, computed on carriers.

        Args:
            h1 (MachineMorphism): First morphism
            h2 (MachineMorphism): Second morphism

        Returns:
            MachineCone: Apex with the inclusion
        """
        _ensure_parallel(h1, h2)
        inclusion = BaseCategoryService.base_limit('equalizer', (h1.f, h2.f)).legs[0]
        apex = MachineService.restrict_machine(h1.src, inclusion)
        return MachineCone('equalizer', apex, (MachineMorphism(apex, h1.src, inclusion),), (h1, h2))

    @staticmethod
    def machine_pullback(h1, h2):
        """
        Pullback of a cospan, computed on carriers.

        Args:
            h1 (MachineMorphism): m1 -> m0
            h2 (MachineMorphism): m2 -> m0

        Returns:
            MachineCone: Apex with its two legs
        """
        if h1.dst != h2.dst:
            raise DiagramError('Pullback needs morphisms with a common target')
        MachineService.ensure_morphism(h1)
        MachineService.ensure_morphism(h2)
        cone = BaseCategoryService.base_limit('pullback', (h1.f, h2.f))
        left, right = cone.legs
        apex = _paired_machine(h1.src, h2.src, cone.apex, left, right)
        legs = (MachineMorphism(apex, h1.src, left), MachineMorphism(apex, h2.src, right))
        return MachineCone('pullback', apex, legs, (h1, h2))

    @staticmethod
    def machine_product(m1, m2):
        """
        Binary product: the pairs of behavior-equivalent states.

        The carrier is the pullback of the two maps into the behavior quotient of
        the coproduct machine.

        Args:
            m1 (FMachine): First factor
            m2 (FMachine): Second factor

        Returns:
            MachineCone: Apex with the projections
        """
        coproduct = LimitService.machine_coproduct(m1, m2)
        partition = BehaviorService.behavior_partition(coproduct.apex)
        quotient = BaseCategoryService.base_colimit('quotient', partition).legs[0]
        inl, inr = (leg.f for leg in coproduct.legs)
        cone = BaseCategoryService.base_limit('pullback', (
            BaseCategoryService.compose(quotient, inl),
            BaseCategoryService.compose(quotient, inr)
        ))
        left, right = cone.legs
        apex = _paired_machine(m1, m2, cone.apex, left, right)
        log.debug('Product of %d and %d states has %d states', m1.size, m2.size, apex.size)
        legs = (MachineMorphism(apex, m1, left), MachineMorphism(apex, m2, right))
        return MachineCone('product', apex, legs, (m1, m2))

    @staticmethod
    def level_pullback(m1, m2, n):
        """
        The pairs of states whose mates agree at every level up to n.

        This is the cumulative reading: P_n is the intersection of the single-level
        pullbacks of the k-th mates for k <= n, not the n-th pullback alone.
        Agreement is checked level by level so the product of the truncated
        codomains is never materialized; P_{n+1} is contained in P_n.

        Args:
            m1 (FMachine): First machine
            m2 (FMachine): Second machine
            n (int): Depth, at least 1 (mealy) or 0 (moore)

        Returns:
            BaseObject: Subobject of E x T
        """
        MachineService.ensure_compatible(m1, m2)
        start = 1 if m1.flavor == 'mealy' else 0
        if n < start:
            raise DiagramError(f'{m1.flavor} behavior starts at depth {start}')
        mates = [
            (BehaviorService.behavior_mate(m1, k), BehaviorService.behavior_mate(m2, k))
            for k in range(start, n + 1)
        ]
        cone = BaseCategoryService.product([m1.carrier, m2.carrier])
        left, right = cone.legs
        return cone.apex.subobject(
            x for x in cone.apex.elements
            if all(first(left(x)) == second(right(x)) for first, second in mates)
        )

    @staticmethod
    def pair_into_product(u, v, product=None):
        """
        The mediating morphism z -> P of two morphisms out of z.

        Args:
            u (MachineMorphism): z -> m1
            v (MachineMorphism): z -> m2
            product (MachineCone): Product of m1 and m2, computed when omitted

        Returns:
            MachineMorphism: z -> P commuting with both projections
        """
        if u.src != v.src:
            raise DiagramError('Paired morphisms need a common source')
        MachineService.ensure_morphism(u)
        MachineService.ensure_morphism(v)
        product = product or LimitService.machine_product(u.dst, v.dst)
        if product.kind != 'product' or product.diagram != (u.dst, v.dst):
            raise DiagramError('Product cone does not match the paired morphisms')
        left, right = (leg.f for leg in product.legs)
        cone = BaseCategoryService.product([u.dst.carrier, v.dst.carrier])
        inclusion = BaseCategoryService.tuple_into_product(cone, [left, right])
        f = BaseCategoryService.factor_through_mono(
            inclusion, BaseCategoryService.tuple_into_product(cone, [u.f, v.f])
        )
        mediating = MachineMorphism(u.src, product.apex, f)
        if not MachineService.is_morphism(mediating):
            raise InternalInvariantError('Pairing is not a machine morphism')
        return mediating

    @staticmethod
    def competitor_machines(apex, size=None):
        """
        Every machine with the apex signature on at most ``size`` states.

        Args:
            apex (FMachine): Machine fixing adjunction, output and flavor
            size (int): Largest carrier, ORACLE_COMPETITOR_SIZE by default

        Returns:
            list: (name, FMachine) pairs
        """
        size = current_config().ORACLE_COMPETITOR_SIZE if size is None else size
        competitors = []
        for n in range(size + 1):
            machines = MachineService.enumerate_machines(apex.adjunction, apex.output, apex.flavor, n)
            competitors.extend((f'enumerated-{n}-{k}', machine) for k, machine in enumerate(machines))
        return competitors

    @staticmethod
    def check_universal(kind, cone, bound=None, competitors=None, competitor_size=None):
        """
        Count mediating morphisms for every competing (co)cone.

        Args:
            kind (str): product, pullback, equalizer, coproduct, coequalizer or initial
            cone (MachineCone): Construction under test
            bound (int): Largest carrier allowed in the construction
            competitors (list): Named fixture machines to compete with
            competitor_size (int): Largest carrier among enumerated competitors

        Returns:
            ConeReport: ok iff every competing cone has exactly one mediating morphism
        """
        if kind != cone.kind:
            raise DiagramError(f'Expected a {kind} construction, got {cone.kind}')
        bound = current_config().ORACLE_BOUND if bound is None else bound
        involved = [cone.apex] + [
            machine
            for item in cone.diagram
            for machine in ((item,) if isinstance(item, FMachine) else (item.src, item.dst))
        ]
        for machine in involved:
            if machine.size > bound:
                raise OracleBoundExceeded(
                    f'A carrier of {machine.size} states exceeds the oracle bound',
                    size=machine.size, bound=bound
                )

        legs_valid = all(MachineService.is_morphism(leg) for leg in cone.legs) and LimitService._commutes(cone)
        pool = [
            (name, machine)
            for name, machine in (competitors or [])
            if MachineService.incompatibility(machine, cone.apex) is None and machine.size <= bound
        ]
        pool += LimitService.competitor_machines(cone.apex, competitor_size)

        total = 0
        failures = []
        for name, z in pool:
            cones, mediating = LimitService._cones_and_keys(cone, z)
            counts = Counter(mediating)
            total += len(cones)
            for key in cones:
                if counts[key] != 1:
                    failures.append({'competitor': name, 'cone': [list(table) for table in key], 'count': counts[key]})
        log.debug('Oracle checked %d cones over %d competitors', total, len(pool))
        return ConeReport(kind, cone.apex, cone.legs, legs_valid, len(pool), total, tuple(failures))

    @staticmethod
    def _commutes(cone):
        compose = BaseCategoryService.compose
        if cone.kind in ('equalizer', 'pullback'):
            h1, h2 = cone.diagram
            first, second = (cone.legs[0], cone.legs[0]) if cone.kind == 'equalizer' else cone.legs
            return compose(h1.f, first.f) == compose(h2.f, second.f)
        if cone.kind == 'coequalizer':
            h1, h2 = cone.diagram
            q = cone.legs[0]
            return compose(q.f, h1.f) == compose(q.f, h2.f)
        return True

    @staticmethod
    def _cones_and_keys(cone, z):
        """Competing cones over z as leg-table keys, and the key of every candidate mediator."""
        compose = BaseCategoryService.compose
        enumerate_morphisms = MachineService.enumerate_morphisms
        legs = [leg.f for leg in cone.legs]

        if cone.kind in ('product', 'pullback'):
            if cone.kind == 'product':
                targets = cone.diagram
            else:
                targets = tuple(h.src for h in cone.diagram)
            pairs = [
                (u.f, v.f)
                for u in enumerate_morphisms(z, targets[0])
                for v in enumerate_morphisms(z, targets[1])
            ]
            if cone.kind == 'pullback':
                h1, h2 = cone.diagram
                pairs = [(u, v) for u, v in pairs if compose(h1.f, u) == compose(h2.f, v)]
            cones = [(u.table, v.table) for u, v in pairs]
            mediating = [
                tuple(compose(leg, w.f).table for leg in legs)
                for w in enumerate_morphisms(z, cone.apex)
            ]
            return cones, mediating

        if cone.kind == 'equalizer':
            h1, h2 = cone.diagram
            cones = [
                (u.f.table,)
                for u in enumerate_morphisms(z, h1.src)
                if compose(h1.f, u.f) == compose(h2.f, u.f)
            ]
            mediating = [(compose(legs[0], w.f).table,) for w in enumerate_morphisms(z, cone.apex)]
            return cones, mediating

        if cone.kind == 'coproduct':
            m1, m2 = cone.diagram
            cones = [
                (u.f.table, v.f.table)
                for u in enumerate_morphisms(m1, z)
                for v in enumerate_morphisms(m2, z)
            ]
            mediating = [
                tuple(compose(w.f, leg).table for leg in legs)
                for w in enumerate_morphisms(cone.apex, z)
            ]
            return cones, mediating

        if cone.kind == 'coequalizer':
            h1, h2 = cone.diagram
            cones = [
                (u.f.table,)
                for u in enumerate_morphisms(h1.dst, z)
                if compose(u.f, h1.f) == compose(u.f, h2.f)
            ]
            mediating = [(compose(w.f, legs[0]).table,) for w in enumerate_morphisms(cone.apex, z)]
            return cones, mediating

        if cone.kind == 'initial':
            return [()], [() for _ in enumerate_morphisms(cone.apex, z)]

        raise DiagramError(f'No universal property check for {cone.kind}')
