"""
Machine service containing construction, morphism checks and word semantics.
"""
import logging

from fmachina.config import current_config
from fmachina.models.base import BaseCategory, BaseMorphism
from fmachina.models.machine import (
    CoalgebraForm,
    FMachine,
    MachineMorphism,
    MorphismReport,
    RunResult,
    Word
)
from fmachina.services.adjunction_service import AdjunctionService
from fmachina.services.base_service import BaseCategoryService
from fmachina.utils.encoding import encode_tuple
from fmachina.utils.errors import (
    CompositionError,
    EnumerationTooLarge,
    IncompatibleMachinesError,
    InvalidMorphismError,
    InvariantViolation,
    WordDomainError
)
from fmachina.utils.validators import missing_keys

log = logging.getLogger(__name__)


def _table_key(key):
    if isinstance(key, tuple):
        return encode_tuple(key)
    return key


class MachineService:
    """Service class for F-Mealy and F-Moore machines."""

    @staticmethod
    def make_machine(flavor, adjunction, carrier, output, d_table, s_table):
        """
        Assemble a machine from tables keyed by element encodings.

        Args:
            flavor (str): mealy or moore
            adjunction (AdjunctionValue): F -| R
            carrier (BaseObject): State object E
            output (BaseObject): Output object O
            d_table (dict): F(E) element -> state
            s_table (dict): F(E) element (mealy) or state (moore) -> output

        Returns:
            FMachine: The validated machine
        """
        context = adjunction.left.on_object(carrier)
        s_domain = context if flavor == 'mealy' else carrier
        d = MachineService.tabulate('Transition', context, carrier, d_table)
        s = MachineService.tabulate('Output', s_domain, output, s_table)
        return FMachine(flavor, adjunction, carrier, output, d, s)

    @staticmethod
    def tabulate(name, dom, cod, table):
        """
        Turn a table keyed by element encodings into a morphism.

        Args:
            name (str): Table name for error messages
            dom (BaseObject): Domain the keys must cover exactly
            cod (BaseObject): Codomain
            table (dict): Element -> image; tuple keys are encoded

        Returns:
            BaseMorphism: The tabulated morphism
        """
        table = {_table_key(key): value for key, value in table.items()}
        missing = missing_keys(table, dom.elements)
        if missing:
            raise InvariantViolation(
                f'{name} table misses {", ".join(missing)}',
                missing=missing
            )
        extra = sorted(key for key in table if key not in dom)
        if extra:
            raise InvariantViolation(
                f'{name} table has entries outside its domain: {", ".join(extra)}',
                extra=extra
            )
        return BaseMorphism.from_mapping(dom, cod, table)

    @staticmethod
    def mk_classical(flavor, inputs, output, states, d_table, s_table, category=None):
        """
        Build a classical Mealy or Moore machine over (-)xI -| (-)^I.

        Args:
            flavor (str): mealy or moore
            inputs (BaseObject): Input alphabet I
            output (BaseObject): Output object O
            states: State identifiers
            d_table (dict): (state, input) -> state
            s_table (dict): (state, input) -> output (mealy) or state -> output (moore)
            category (BaseCategory): Base category, plain finite sets by default

        Returns:
            FMachine: The classical machine
        """
        category = category or BaseCategory()
        adjunction = AdjunctionService.product_exponential(category, inputs)
        carrier = category.make_object(states)
        return MachineService.make_machine(flavor, adjunction, carrier, output, d_table, s_table)

    @staticmethod
    def ensure_compatible(first, second):
        """
        Raise unless two machines share flavor, adjunction and output object.

        Args:
            first (FMachine): First machine
            second (FMachine): Second machine
        """
        reason = MachineService.incompatibility(first, second)
        if reason:
            raise IncompatibleMachinesError(reason)

    @staticmethod
    def incompatibility(first, second):
        if first.flavor != second.flavor:
            return f'Flavors differ: {first.flavor} vs {second.flavor}'
        if first.adjunction != second.adjunction:
            return 'Machines are built over different adjunctions'
        if first.output != second.output:
            return 'Machines have different output objects'
        return None

    @staticmethod
    def validate_morphism(h):
        """
        Check both morphism squares elementwise.

        Args:
            h (MachineMorphism): Candidate morphism

        Returns:
            MorphismReport: ok, and every element at which a square fails
        """
        src, dst, f = h.src, h.dst, h.f
        reason = MachineService.incompatibility(src, dst)
        if reason is None and (f.dom != src.carrier or f.cod != dst.carrier):
            reason = 'Carrier map does not run between the machine carriers'
        if reason:
            return MorphismReport(False, (), reason)

        lifted = src.adjunction.left.on_morphism(f)
        violations = []
        for x in src.context.elements:
            expected, actual = f(src.d(x)), dst.d(lifted(x))
            if expected != actual:
                violations.append((('square', 'd'), ('at', x), ('expected', expected), ('actual', actual)))
        if src.flavor == 'mealy':
            for x in src.context.elements:
                expected, actual = src.s(x), dst.s(lifted(x))
                if expected != actual:
                    violations.append((('square', 's'), ('at', x), ('expected', expected), ('actual', actual)))
        else:
            for e in src.carrier.elements:
                expected, actual = src.s(e), dst.s(f(e))
                if expected != actual:
                    violations.append((('square', 's'), ('at', e), ('expected', expected), ('actual', actual)))
        return MorphismReport(not violations, tuple(violations))

    @staticmethod
    def is_morphism(h):
        return MachineService.validate_morphism(h).ok

    @staticmethod
    def ensure_morphism(h):
        """Raise InvalidMorphismError naming the first failed square."""
        report = MachineService.validate_morphism(h)
        if report.ok:
            return h
        if report.incompatibility:
            raise InvalidMorphismError(report.incompatibility)
        first = dict(report.violations[0])
        raise InvalidMorphismError(
            f'The {first["square"]}-square fails at {first["at"]}',
            violations=[dict(item) for item in report.violations]
        )

    @staticmethod
    def identity_morphism(m):
        return MachineMorphism(m, m, BaseMorphism.identity(m.carrier))

    @staticmethod
    def compose_morphisms(k, h):
        """
        Compose machine morphisms.

        Args:
            k (MachineMorphism): Second morphism
            h (MachineMorphism): First morphism, with h.dst equal to k.src

        Returns:
            MachineMorphism: k after h
        """
        if h.dst != k.src:
            raise CompositionError('Machine morphisms are not composable')
        return MachineMorphism(h.src, k.dst, BaseCategoryService.compose(k.f, h.f))

    @staticmethod
    def quotient_machine(m, quotient):
        """
        Induce the structure of m on a quotient of its carrier.

        Args:
            m (FMachine): Machine
            quotient (BaseMorphism): Surjection E -> Q whose kernel the structure respects

        Returns:
            FMachine: Machine on Q with quotient a machine morphism
        """
        lifted = m.adjunction.left.on_morphism(quotient)
        d = BaseCategoryService.factor_through_epi(lifted, BaseCategoryService.compose(quotient, m.d))
        if m.flavor == 'mealy':
            s = BaseCategoryService.factor_through_epi(lifted, m.s)
        else:
            s = BaseCategoryService.factor_through_epi(quotient, m.s)
        return FMachine(m.flavor, m.adjunction, quotient.cod, m.output, d, s)

    @staticmethod
    def restrict_machine(m, inclusion):
        """
        Restrict the structure of m to a subobject closed under d.

        Args:
            m (FMachine): Machine
            inclusion (BaseMorphism): Injection S -> E

        Returns:
            FMachine: Machine on S with inclusion a machine morphism
        """
        lifted = m.adjunction.left.on_morphism(inclusion)
        d = BaseCategoryService.factor_through_mono(inclusion, BaseCategoryService.compose(m.d, lifted))
        s = BaseCategoryService.compose(m.s, lifted if m.flavor == 'mealy' else inclusion)
        return FMachine(m.flavor, m.adjunction, inclusion.dom, m.output, d, s)

    @staticmethod
    def run_word(m, state, word):
        """
        Run a classical machine on a word.

        Args:
            m (FMachine): Machine over product-exponential
            state (str): Start state
            word (Word): Input word; nonempty for mealy machines

        Returns:
            RunResult: Final state, output and visited states
        """
        if m.adjunction.kind != 'product-exponential':
            raise WordDomainError('Word semantics needs a product-exponential machine')
        if state not in m.carrier:
            raise InvariantViolation(f'{state} is not a state of the machine')
        letters = set(m.adjunction.spec['input'])
        unknown = [symbol for symbol in word if symbol not in letters]
        if unknown:
            raise WordDomainError(f'Symbols outside the input alphabet: {", ".join(unknown)}')
        if m.flavor == 'mealy' and not len(word):
            raise WordDomainError('Mealy machines read nonempty words (I+)')

        trace = [state]
        output = None
        for position, symbol in enumerate(word):
            key = encode_tuple((state, symbol))
            if m.flavor == 'mealy' and position == len(word) - 1:
                output = m.s(key)
            state = m.d(key)
            trace.append(state)
        if m.flavor == 'moore':
            output = m.s(state)
        return RunResult(word, state, output, tuple(trace))

    @staticmethod
    def coalgebra_form(m):
        """
        Transpose the structure maps.

        Args:
            m (FMachine): Machine

        Returns:
            CoalgebraForm: d_bar : E -> RE, and s_bar : E -> RO for mealy machines
        """
        d_bar = m.adjunction.transpose(m.d, m.carrier)
        s_bar = m.adjunction.transpose(m.s, m.carrier) if m.flavor == 'mealy' else None
        return CoalgebraForm(d_bar, s_bar, m.s)

    @staticmethod
    def enumerate_morphisms(src, dst, bound=None):
        """
        All machine morphisms between two machines, in hom-set order.

        Args:
            src (FMachine): Source machine
            dst (FMachine): Target machine
            bound (int): Maximum number of candidate carrier maps

        Returns:
            list: Valid MachineMorphism values
        """
        MachineService.ensure_compatible(src, dst)
        morphisms = []
        for f in BaseCategoryService.enumerate_hom(src.carrier, dst.carrier, bound):
            h = MachineMorphism(src, dst, f)
            if MachineService.validate_morphism(h).ok:
                morphisms.append(h)
        return morphisms

    @staticmethod
    def enumerate_machines(adjunction, output, flavor, size, bound=None):
        """
        Every machine with the given signature on carriers of one size.

        Args:
            adjunction (AdjunctionValue): F -| R
            output (BaseObject): Output object O
            flavor (str): mealy or moore
            size (int): Number of states
            bound (int): Maximum number of candidate machines

        Returns:
            list: FMachine values on the carrier ``s0..s{size-1}``
        """
        bound = current_config().ENUMERATION_BOUND if bound is None else bound
        machines = []
        for carrier in BaseCategoryService.enumerate_objects(adjunction.base, size, bound):
            context = adjunction.left.on_object(carrier)
            transitions = BaseCategoryService.enumerate_hom(context, carrier, bound)
            outputs = BaseCategoryService.enumerate_hom(
                context if flavor == 'mealy' else carrier, output, bound
            )
            if len(machines) + len(transitions) * len(outputs) > bound:
                raise EnumerationTooLarge(
                    f'Machine enumeration on {size} states exceeds the bound',
                    size=len(machines) + len(transitions) * len(outputs), bound=bound
                )
            for d in transitions:
                for s in outputs:
                    machines.append(FMachine(flavor, adjunction, carrier, output, d, s))
        log.debug('Enumerated %d %s machines on %d states', len(machines), flavor, size)
        return machines
