"""
F-algebras, output legs and the intensional representation of behavior maps.
"""
from dataclasses import dataclass

from fmachina.models.adjunction import AdjunctionValue
from fmachina.models.base import BaseMorphism, BaseObject
from fmachina.models.machine import FMachine
from fmachina.utils.errors import IncompatibleMachinesError, InvariantViolation


@dataclass(frozen=True)
class FAlgebra:
    """Carrier A with structure a : FA -> A."""

    adjunction: AdjunctionValue
    carrier: BaseObject
    structure: BaseMorphism

    def __post_init__(self):
        if self.structure.dom != self.adjunction.left.on_object(self.carrier) or self.structure.cod != self.carrier:
            raise InvariantViolation('Algebra structure must run from F(A) to A')

    def to_dict(self):
        return {'carrier': list(self.carrier.elements), 'structure': self.structure.as_dict()}


@dataclass(frozen=True)
class SliceLeg:
    """Output leg FE -> O (mealy, an object of F/O) or E -> O (moore, an object of K/O)."""

    flavor: str
    adjunction: AdjunctionValue
    carrier: BaseObject
    morphism: BaseMorphism

    def __post_init__(self):
        expected = self.adjunction.left.on_object(self.carrier) if self.flavor == 'mealy' else self.carrier
        if self.morphism.dom != expected:
            raise InvariantViolation(f'Output leg of a {self.flavor} machine starts at the wrong object')

    @property
    def output(self):
        return self.morphism.cod

    def to_dict(self):
        return {'flavor': self.flavor, 'morphism': self.morphism.as_dict()}


@dataclass(frozen=True)
class AlgebraMorphism:
    src: FAlgebra
    dst: FAlgebra
    f: BaseMorphism


@dataclass(frozen=True)
class SliceMorphism:
    src: SliceLeg
    dst: SliceLeg
    f: BaseMorphism


@dataclass(frozen=True)
class IntensionalMap:
    """A Moore machine standing for the unique algebra map from its carrier to O_inf."""

    machine: FMachine

    def __post_init__(self):
        if self.machine.flavor != 'moore':
            raise IncompatibleMachinesError('Behavior maps are carried by Moore machines')

    @property
    def algebra(self):
        return FAlgebra(self.machine.adjunction, self.machine.carrier, self.machine.d)

    @property
    def carrier(self):
        return self.machine.carrier


@dataclass(frozen=True)
class BijectionReport:
    """Both sides of Hom(L x, m) = Hom(x, B m) with the transports between them."""

    left: tuple
    right: tuple
    forward: tuple
    backward: tuple
    naturality: tuple = ()

    @property
    def ok(self):
        return (
            len(self.left) == len(self.right)
            and sorted(self.forward) == sorted(self.right)
            and sorted(self.backward) == sorted(self.left)
            and all(item['ok'] for item in self.naturality)
        )

    def to_dict(self):
        return {
            'machine_morphisms': [list(table) for table in self.left],
            'algebra_morphisms': [list(table) for table in self.right],
            'sizes': [len(self.left), len(self.right)],
            'naturality': [dict(item) for item in self.naturality],
            'ok': self.ok
        }
