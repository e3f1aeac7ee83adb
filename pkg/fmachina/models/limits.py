"""
Limit cones and colimit cocones of machines, and universal-property reports.
"""
from dataclasses import dataclass

from fmachina.models.machine import FMachine

COCONE_KINDS = ('coproduct', 'coequalizer', 'initial')


@dataclass(frozen=True)
class MachineCone:
    """Apex with its legs; cocone kinds have legs into the apex.

    ``diagram`` holds the machines (product, coproduct) or morphisms (equalizer,
    coequalizer, pullback) the construction was computed from.
    """

    kind: str
    apex: FMachine
    legs: tuple
    diagram: tuple = ()

    @property
    def is_cocone(self):
        return self.kind in COCONE_KINDS


@dataclass(frozen=True)
class ConeReport:
    kind: str
    apex: FMachine
    legs: tuple
    legs_valid: bool
    competitors: int
    cones: int
    failures: tuple = ()

    @property
    def ok(self):
        return self.legs_valid and not self.failures

    def to_dict(self):
        return {
            'kind': self.kind,
            'apex_states': list(self.apex.states),
            'legs': [leg.to_dict() for leg in self.legs],
            'legs_valid': self.legs_valid,
            'competitors': self.competitors,
            'cones': self.cones,
            'failures': [dict(failure) for failure in self.failures],
            'ok': self.ok
        }
