"""
Finite approximations of machine behavior.
"""
from dataclasses import dataclass

from fmachina.models.base import BaseMorphism, BaseObject, Partition
from fmachina.models.machine import FMachine


@dataclass(frozen=True)
class TruncatedBehavior:
    """Mates s_bar_n : E -> R^n O for n from ``start`` (0 moore, 1 mealy) up to ``depth``."""

    machine: FMachine
    depth: int
    start: int
    mates: tuple

    def mate(self, n):
        return self.mates[n - self.start]

    def to_dict(self):
        return {
            'flavor': self.machine.flavor,
            'depth': self.depth,
            'mates': [
                {'n': n, 'table': mate.as_dict()}
                for n, mate in enumerate(self.mates, start=self.start)
            ]
        }


@dataclass(frozen=True)
class RefinementResult:
    """Stable partition together with every intermediate partition."""

    partition: Partition
    rounds: int
    history: tuple

    def separation_round(self, x, y):
        """First round whose partition separates x and y, or None."""
        for round_number, partition in enumerate(self.history):
            if partition.block(x) != partition.block(y):
                return round_number
        return None

    def to_dict(self):
        return {
            'blocks': self.partition.to_list(),
            'rounds': self.rounds,
            'history': [partition.size for partition in self.history]
        }


@dataclass(frozen=True)
class TerminalTruncation:
    """Levels of the terminal machine carrier kept up to a finite depth.

    ``d_leg`` lands in ``next_carrier``, the truncation one level shorter.
    """

    flavor: str
    depth: int
    levels: tuple
    carrier: BaseObject
    factors: tuple
    s_leg: BaseMorphism
    d_leg: BaseMorphism
    next_carrier: BaseObject

    def to_dict(self):
        return {
            'flavor': self.flavor,
            'depth': self.depth,
            'levels': list(self.levels),
            'factor_sizes': [factor.size for factor in self.factors],
            'size': self.carrier.size,
            'next_size': self.next_carrier.size
        }
