"""
Behavior service: skip maps, mates, partition refinement and terminal truncations.
"""
import logging
from functools import lru_cache

from fmachina.models.base import BaseMorphism, Partition
from fmachina.models.behavior import RefinementResult, TerminalTruncation, TruncatedBehavior
from fmachina.models.machine import MachineMorphism
from fmachina.services.adjunction_service import AdjunctionService
from fmachina.services.base_service import BaseCategoryService
from fmachina.services.machine_service import MachineService
from fmachina.utils.encoding import encode_left, encode_right, encode_tuple
from fmachina.utils.errors import DiagramError, InvariantViolation, SizeGuardExceeded

log = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def _iterated(adjunction, times):
    return AdjunctionService.iterate_adjunction(adjunction, times)


def _first_level(flavor):
    return 1 if flavor == 'mealy' else 0


def _levels(flavor, depth):
    start = _first_level(flavor)
    if depth < start:
        raise DiagramError(f'{flavor} behavior starts at depth {start}')
    return tuple(range(start, depth + 1))


def _power(adjunction, output, n):
    """R^n O, with the level reported when the size guard trips."""
    if n == 0:
        return output
    try:
        return _iterated(adjunction, n).right.on_object(output)
    except SizeGuardExceeded as error:
        raise SizeGuardExceeded(
            f'R^{n} O is too large to materialize: {error.detail}',
            size=error.size, bound=error.bound, level=n
        )


def _truncated_product(adjunction, output, levels):
    factors = tuple(_power(adjunction, output, n) for n in levels)
    if not factors:
        return BaseCategoryService.base_limit('terminal', adjunction.base), factors
    return BaseCategoryService.product(factors), factors


class BehaviorService:
    """Service class for the behavior of F-machines."""

    @staticmethod
    def skip_map(m, n):
        """
        The n-th skip map s_n : F^n E -> O.

        Mealy: s_1 = s and s_{k+1} = s_k . F^k d. Moore: s_0 = s with the same
        recurrence, so s_1 = s . d and s_2 = s . d . Fd.

        Args:
            m (FMachine): Machine
            n (int): Depth, at least 1 (mealy) or 0 (moore)

        Returns:
            BaseMorphism: F^n E -> O
        """
        start = _first_level(m.flavor)
        if n < start:
            raise DiagramError(f'Skip maps of {m.flavor} machines start at n = {start}')
        functor = m.adjunction.left
        current = m.s
        lifted = m.d if start == 0 else functor.on_morphism(m.d)
        for _ in range(start, n):
            current = BaseCategoryService.compose(current, lifted)
            lifted = functor.on_morphism(lifted)
        return current

    @staticmethod
    def behavior_mate(m, n):
        """
        The mate s_bar_n : E -> R^n O of the n-th skip map.

        Args:
            m (FMachine): Machine
            n (int): Depth, at least 1 (mealy) or 0 (moore)

        Returns:
            BaseMorphism: E -> R^n O
        """
        skip = BehaviorService.skip_map(m, n)
        if n == 0:
            return skip
        _power(m.adjunction, m.output, n)
        return _iterated(m.adjunction, n).transpose(skip, m.carrier)

    @staticmethod
    def truncated_behavior(m, depth):
        levels = _levels(m.flavor, depth)
        mates = tuple(BehaviorService.behavior_mate(m, n) for n in levels)
        return TruncatedBehavior(m, depth, levels[0], mates)

    @staticmethod
    def refine(m):
        """
        Partition refinement up to the kernel of the full behavior.

        Starts from the kernel of s (moore) or of s_bar_1 (mealy) and splits blocks
        by R(q) . d_bar, where q is the current quotient, until nothing splits.

        Args:
            m (FMachine): Machine

        Returns:
            RefinementResult: Stable partition, number of splitting rounds, history
        """
        carrier = m.carrier
        adjunction = m.adjunction
        first = m.s if m.flavor == 'moore' else adjunction.transpose(m.s, carrier)
        d_bar = adjunction.transpose(m.d, carrier)

        partition = Partition.from_key(carrier, first)
        history = [partition]
        while True:
            quotient = BaseCategoryService.base_colimit('quotient', partition).legs[0]
            observed = BaseCategoryService.compose(adjunction.right.on_morphism(quotient), d_bar)
            current = partition
            refined = Partition.from_key(carrier, lambda e: (current.block(e), observed(e)))
            if refined.size == partition.size:
                break
            partition = refined
            history.append(partition)
            log.debug('Refinement round %d: %d blocks', len(history) - 1, partition.size)
        return RefinementResult(partition, len(history) - 1, tuple(history))

    @staticmethod
    def behavior_partition(m):
        return BehaviorService.refine(m).partition

    @staticmethod
    def minimize(m):
        """
        Quotient a machine by behavior equivalence.

        Args:
            m (FMachine): Machine

        Returns:
            tuple: (minimal FMachine, quotient MachineMorphism)
        """
        partition = BehaviorService.behavior_partition(m)
        quotient = BaseCategoryService.base_colimit('quotient', partition).legs[0]
        minimal = MachineService.quotient_machine(m, quotient)
        log.debug('Minimized %d states to %d', m.size, minimal.size)
        return minimal, MachineMorphism(m, minimal, quotient)

    @staticmethod
    def equivalence(m1, m2, e1, e2):
        """
        Decide behavior equivalence of two states through the coproduct machine.

        Args:
            m1 (FMachine): Machine holding e1
            m2 (FMachine): Machine holding e2
            e1 (str): State of m1
            e2 (str): State of m2

        Returns:
            dict: equivalent flag and the refinement round separating the states
        """
        from fmachina.services.limit_service import LimitService

        MachineService.ensure_compatible(m1, m2)
        for state, machine in ((e1, m1), (e2, m2)):
            if state not in machine.carrier:
                raise InvariantViolation(f'{state} is not a state of the machine')
        coproduct = LimitService.machine_coproduct(m1, m2)
        result = BehaviorService.refine(coproduct.apex)
        left, right = encode_left(e1), encode_right(e2)
        return {
            'equivalent': result.partition.block(left) == result.partition.block(right),
            'separated_at': result.separation_round(left, right)
        }

    @staticmethod
    def equivalent(m1, m2, e1, e2):
        return BehaviorService.equivalence(m1, m2, e1, e2)['equivalent']

    @staticmethod
    def terminal_truncation(adjunction, output, depth, flavor):
        """
        Truncate the terminal machine carrier, the product of the R^n O.

        Mealy keeps levels 1..N, moore keeps 0..N. The d-leg consumes one level:
        it is the inverse transpose of the shifted projections read through
        R(prod R^n O) = prod R^{n+1} O.

        Args:
            adjunction (AdjunctionValue): F -| R
            output (BaseObject): Output object O
            depth (int): N
            flavor (str): mealy or moore

        Returns:
            TerminalTruncation: Carrier O_{<=N}, its legs and O_{<=N-1}
        """
        levels = _levels(flavor, depth)
        cone, factors = _truncated_product(adjunction, output, levels)
        carrier = cone.apex

        head = cone.legs[0]
        if flavor == 'mealy':
            s_leg = adjunction.transpose_inv(head, output)
        else:
            s_leg = head

        next_cone, next_factors = _truncated_product(adjunction, output, levels[:-1])
        next_carrier = next_cone.apex
        context = adjunction.left.on_object(carrier)
        if not next_factors:
            d_leg = BaseMorphism(context, next_carrier, (encode_tuple([]),) * context.size)
        else:
            shifted = cone.legs[1:]
            shift_cone = BaseCategoryService.product([leg.cod for leg in shifted])
            comparison = BaseCategoryService.tuple_into_product(
                shift_cone, [adjunction.right.on_morphism(leg) for leg in next_cone.legs]
            )
            into_power = BaseCategoryService.compose(
                BaseCategoryService.invert(comparison),
                BaseCategoryService.tuple_into_product(shift_cone, shifted)
            )
            d_leg = adjunction.transpose_inv(into_power, next_carrier)
        log.debug('Terminal truncation at depth %d has %d elements', depth, carrier.size)
        return TerminalTruncation(flavor, depth, levels, carrier, factors, s_leg, d_leg, next_carrier)

    @staticmethod
    def behavior_map(m, depth):
        """
        The map E -> O_{<=N} pairing every mate up to depth N.

        Args:
            m (FMachine): Machine
            depth (int): N

        Returns:
            BaseMorphism: E -> carrier of terminal_truncation at depth N
        """
        levels = _levels(m.flavor, depth)
        cone, _ = _truncated_product(m.adjunction, m.output, levels)
        mates = [BehaviorService.behavior_mate(m, n) for n in levels]
        return BaseCategoryService.tuple_into_product(cone, mates)
