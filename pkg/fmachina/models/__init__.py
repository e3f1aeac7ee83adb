from fmachina.models.base import (
    BaseCategory,
    BaseCocone,
    BaseCone,
    BaseMorphism,
    BaseObject,
    FiniteMonoid,
    MonoidHom,
    Partition
)
from fmachina.models.adjunction import AdjunctionValue, EndofunctorValue
from fmachina.models.machine import (
    CoalgebraForm,
    FMachine,
    MachineMorphism,
    MorphismReport,
    RunResult,
    Word
)
from fmachina.models.behavior import RefinementResult, TerminalTruncation, TruncatedBehavior
from fmachina.models.limits import ConeReport, MachineCone
from fmachina.models.algebra import (
    AlgebraMorphism,
    BijectionReport,
    FAlgebra,
    IntensionalMap,
    SliceLeg,
    SliceMorphism
)

__all__ = [
    'AdjunctionValue',
    'AlgebraMorphism',
    'BaseCategory',
    'BaseCocone',
    'BaseCone',
    'BaseMorphism',
    'BaseObject',
    'BijectionReport',
    'CoalgebraForm',
    'ConeReport',
    'EndofunctorValue',
    'FAlgebra',
    'FMachine',
    'FiniteMonoid',
    'IntensionalMap',
    'MachineCone',
    'MachineMorphism',
    'MonoidHom',
    'MorphismReport',
    'Partition',
    'RefinementResult',
    'RunResult',
    'SliceLeg',
    'SliceMorphism',
    'TerminalTruncation',
    'TruncatedBehavior',
    'Word'
]
