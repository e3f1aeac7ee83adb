"""
F-Mealy and F-Moore machines, machine morphisms and input words.
"""
from dataclasses import dataclass, field
from typing import Optional

from fmachina.models.adjunction import AdjunctionValue
from fmachina.models.base import BaseMorphism, BaseObject
from fmachina.utils.errors import InvariantViolation

FLAVORS = ('mealy', 'moore')


@dataclass(frozen=True)
class FMachine:
    """Carrier E with d : FE -> E and s : FE -> O (mealy) or s : E -> O (moore)."""

    flavor: str
    adjunction: AdjunctionValue
    carrier: BaseObject
    output: BaseObject
    d: BaseMorphism
    s: BaseMorphism

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise InvariantViolation(f'Unknown machine flavor {self.flavor!r}')
        base = self.adjunction.base
        if not base.contains(self.carrier) or not base.contains(self.output):
            raise InvariantViolation(f'Carrier and output must be objects of {base.kind}')
        context = self.adjunction.left.on_object(self.carrier)
        if self.d.dom != context or self.d.cod != self.carrier:
            raise InvariantViolation('Transition map must run from F(E) to E')
        expected = context if self.flavor == 'mealy' else self.carrier
        if self.s.dom != expected or self.s.cod != self.output:
            shape = 'F(E)' if self.flavor == 'mealy' else 'E'
            raise InvariantViolation(f'Output map of a {self.flavor} machine must run from {shape} to O')

    @property
    def context(self):
        """The object F(E) the structure maps read from."""
        return self.adjunction.left.on_object(self.carrier)

    @property
    def states(self):
        return self.carrier.elements

    @property
    def size(self):
        return self.carrier.size

    def signature(self):
        return {
            'flavor': self.flavor,
            'adjunction': self.adjunction.spec,
            'output': list(self.output.elements)
        }


@dataclass(frozen=True)
class MachineMorphism:
    """Carrier map between two machines; validity is checked by the machine service."""

    src: FMachine
    dst: FMachine
    f: BaseMorphism

    def __call__(self, state):
        return self.f(state)

    def to_dict(self):
        return self.f.as_dict()


@dataclass(frozen=True)
class Word:
    """Finite sequence of input symbols."""

    symbols: tuple = ()

    @classmethod
    def parse(cls, text):
        """Parse a comma separated word; the empty string is the empty word."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(symbol.strip() for symbol in text.split(',')))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return ','.join(self.symbols)


@dataclass(frozen=True)
class MorphismReport:
    ok: bool
    violations: tuple = ()
    incompatibility: Optional[str] = None

    def to_dict(self):
        data = {'ok': self.ok, 'violations': [dict(item) for item in self.violations]}
        if self.incompatibility is not None:
            data['incompatibility'] = self.incompatibility
        return data


@dataclass(frozen=True)
class RunResult:
    word: Word
    final_state: str
    output: str
    trace: tuple = field(default_factory=tuple)

    def to_dict(self):
        return {
            'word': list(self.word.symbols),
            'final_state': self.final_state,
            'output': self.output,
            'trace': list(self.trace)
        }


@dataclass(frozen=True)
class CoalgebraForm:
    """The transposed structure: d_bar : E -> RE and, for mealy, s_bar : E -> RO."""

    d_bar: BaseMorphism
    s_bar: Optional[BaseMorphism]
    s: BaseMorphism

    def to_dict(self):
        data = {'d_bar': self.d_bar.as_dict(), 's': self.s.as_dict()}
        if self.s_bar is not None:
            data['s_bar'] = self.s_bar.as_dict()
        return data
