"""
Objects and morphisms of the concrete base categories: finite sets and finite M-sets.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from fmachina.utils.encoding import encode_tuple
from fmachina.utils.errors import InvariantViolation
from fmachina.utils.validators import (
    action_law_violations,
    find_duplicates,
    monoid_law_violations
)


@dataclass(frozen=True)
class FiniteMonoid:
    """Finite monoid given by its multiplication table.

    ``mult[i][j]`` is the product ``elements[i] * elements[j]``.
    """

    elements: tuple
    unit: str
    mult: tuple

    def __post_init__(self):
        duplicates = find_duplicates(self.elements)
        if duplicates:
            raise InvariantViolation(f'Monoid elements repeat: {", ".join(duplicates)}')
        if self.unit not in self.index:
            raise InvariantViolation(f'Unit {self.unit} is not a monoid element')
        if len(self.mult) != len(self.elements) or any(len(row) != len(self.elements) for row in self.mult):
            raise InvariantViolation('Multiplication table does not match the element list')
        for row in self.mult:
            for entry in row:
                if entry not in self.index:
                    raise InvariantViolation(f'Product {entry} is not a monoid element')
        violations = monoid_law_violations(self.elements, self.unit, self.multiply)
        if violations:
            raise InvariantViolation(f'Monoid laws fail: {violations[0]}', violations=violations)

    @cached_property
    def index(self):
        return {m: position for position, m in enumerate(self.elements)}

    @property
    def size(self):
        return len(self.elements)

    def multiply(self, a, b):
        return self.mult[self.index[a]][self.index[b]]

    @classmethod
    def from_function(cls, elements, unit, multiply):
        elements = tuple(elements)
        return cls(elements, unit, tuple(tuple(multiply(a, b) for b in elements) for a in elements))

    @classmethod
    def trivial(cls):
        return cls(('1',), '1', (('1',),))

    @classmethod
    def cyclic(cls, order):
        """Cyclic group Z/nZ with elements '0'..'n-1' under addition."""
        return cls.from_function(
            [str(k) for k in range(order)], '0',
            lambda a, b: str((int(a) + int(b)) % order)
        )

    def to_dict(self):
        return {
            'elements': list(self.elements),
            'unit': self.unit,
            'mult': {a: {b: self.multiply(a, b) for b in self.elements} for a in self.elements}
        }

    @staticmethod
    def from_dict(data):
        """
        Create a FiniteMonoid from its document form.

        Args:
            data (dict): elements, unit and nested mult table

        Returns:
            FiniteMonoid: New monoid instance
        """
        elements = tuple(data['elements'])
        mult = data['mult']
        try:
            rows = tuple(tuple(mult[a][b] for b in elements) for a in elements)
        except KeyError as missing:
            raise InvariantViolation(f'Multiplication table misses an entry for {missing}')
        return FiniteMonoid(elements, data['unit'], rows)


@dataclass(frozen=True)
class MonoidHom:
    """Monoid homomorphism; ``table`` is aligned with ``dom.elements``."""

    dom: FiniteMonoid
    cod: FiniteMonoid
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise InvariantViolation('Homomorphism table does not cover the domain monoid')
        for image in self.table:
            if image not in self.cod.index:
                raise InvariantViolation(f'{image} is not an element of the codomain monoid')
        if self(self.dom.unit) != self.cod.unit:
            raise InvariantViolation('Homomorphism does not preserve the unit')
        for a in self.dom.elements:
            for b in self.dom.elements:
                if self(self.dom.multiply(a, b)) != self.cod.multiply(self(a), self(b)):
                    raise InvariantViolation(f'Homomorphism does not preserve the product of ({a},{b})')

    def __call__(self, m):
        return self.table[self.dom.index[m]]

    @classmethod
    def identity(cls, monoid):
        return cls(monoid, monoid, monoid.elements)

    def to_dict(self):
        return {
            'dom': self.dom.to_dict(),
            'cod': self.cod.to_dict(),
            'table': {m: self(m) for m in self.dom.elements}
        }

    @staticmethod
    def from_dict(data):
        dom = FiniteMonoid.from_dict(data['dom'])
        cod = FiniteMonoid.from_dict(data['cod'])
        missing = [m for m in dom.elements if m not in data['table']]
        if missing:
            raise InvariantViolation(f'Homomorphism table misses {", ".join(missing)}')
        return MonoidHom(dom, cod, tuple(data['table'][m] for m in dom.elements))


@dataclass(frozen=True)
class BaseObject:
    """Finite set, or finite M-set when ``monoid`` is given.

    ``action[k][j]`` is ``monoid.elements[k]`` acting on ``elements[j]``.
    """

    elements: tuple
    monoid: Optional[FiniteMonoid] = None
    action: Optional[tuple] = None

    def __post_init__(self):
        duplicates = find_duplicates(self.elements)
        if duplicates:
            raise InvariantViolation(f'Element identifiers repeat: {", ".join(duplicates)}')
        if self.monoid is None:
            if self.action is not None:
                raise InvariantViolation('A plain finite set carries no action table')
            return
        if self.action is None or len(self.action) != self.monoid.size:
            raise InvariantViolation('Action table must have one row per monoid element')
        for row in self.action:
            if len(row) != len(self.elements):
                raise InvariantViolation('Action table row does not cover the elements')
            for entry in row:
                if entry not in self.index:
                    raise InvariantViolation(f'Action lands outside the set at {entry}')
        violations = action_law_violations(self.monoid, self.elements, self.act)
        if violations:
            raise InvariantViolation(f'Action laws fail: {violations[0]}', violations=violations)

    @cached_property
    def index(self):
        return {x: position for position, x in enumerate(self.elements)}

    @property
    def kind(self):
        return 'plain' if self.monoid is None else 'monoid-action'

    @property
    def category(self):
        return BaseCategory(self.monoid)

    @property
    def size(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def act(self, m, x):
        return self.action[self.monoid.index[m]][self.index[x]]

    @classmethod
    def build(cls, elements, monoid=None, act=None):
        """
        Build an object from its elements and an action function.

        Args:
            elements: Element identifiers in order
            monoid (FiniteMonoid): Acting monoid, or None for a plain set
            act (callable): act(m, x) -> element, required with a monoid

        Returns:
            BaseObject: The constructed object
        """
        elements = tuple(elements)
        if monoid is None:
            return cls(elements)
        return cls(elements, monoid, tuple(tuple(act(m, x) for x in elements) for m in monoid.elements))

    def subobject(self, members):
        """Sub-(M-)set on ``members``, kept in carrier order."""
        members = set(members)
        elements = [x for x in self.elements if x in members]
        if self.monoid is not None:
            for m in self.monoid.elements:
                for x in elements:
                    if self.act(m, x) not in members:
                        raise InvariantViolation(f'Subset is not closed under the action at ({m},{x})')
        return BaseObject.build(elements, self.monoid, self.act)

    def to_dict(self):
        data = {'elements': list(self.elements)}
        if self.monoid is not None:
            data['action'] = {m: {x: self.act(m, x) for x in self.elements} for m in self.monoid.elements}
        return data


@dataclass(frozen=True)
class BaseCategory:
    """Finite sets (no monoid) or finite M-sets over ``monoid``."""

    monoid: Optional[FiniteMonoid] = None

    @property
    def kind(self):
        return 'finset' if self.monoid is None else 'mset'

    def make_object(self, elements, act=None):
        if self.monoid is not None and act is None:
            return BaseObject.build(elements, self.monoid, lambda m, x: x)
        return BaseObject.build(elements, self.monoid, act)

    def terminal(self):
        return self.make_object([encode_tuple([])])

    def initial(self):
        return self.make_object([])

    def contains(self, obj):
        return obj.monoid == self.monoid

    def to_dict(self):
        if self.monoid is None:
            return {'kind': 'finset'}
        return {'kind': 'mset', 'monoid': self.monoid.to_dict()}


def equivariance_violations(dom, cod, table):
    """
    List the (m, x) pairs at which ``table`` fails to commute with the actions.

    Args:
        dom (BaseObject): Domain
        cod (BaseObject): Codomain
        table: Images aligned with ``dom.elements``

    Returns:
        list: Offending (m, x) pairs
    """
    if dom.monoid is None:
        return []
    images = dict(zip(dom.elements, table))
    return [
        (m, x)
        for m in dom.monoid.elements
        for x in dom.elements
        if images[dom.act(m, x)] != cod.act(m, images[x])
    ]


@dataclass(frozen=True)
class BaseMorphism:
    """Total (equivariant) function; ``table`` is aligned with ``dom.elements``."""

    dom: BaseObject
    cod: BaseObject
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise InvariantViolation('Morphism table is not total on its domain')
        for image in self.table:
            if image not in self.cod.index:
                raise InvariantViolation(f'Morphism image {image} is not an element of the codomain')
        if self.dom.monoid != self.cod.monoid:
            raise InvariantViolation('Morphism endpoints live in different base categories')
        violations = equivariance_violations(self.dom, self.cod, self.table)
        if violations:
            m, x = violations[0]
            raise InvariantViolation(f'Morphism is not equivariant at ({m},{x})', violations=violations)

    def __call__(self, x):
        return self.table[self.dom.index[x]]

    @classmethod
    def from_function(cls, dom, cod, function):
        return cls(dom, cod, tuple(function(x) for x in dom.elements))

    @classmethod
    def from_mapping(cls, dom, cod, mapping):
        missing = [x for x in dom.elements if x not in mapping]
        if missing:
            raise InvariantViolation(f'Mapping misses {", ".join(missing)}', missing=missing)
        return cls(dom, cod, tuple(mapping[x] for x in dom.elements))

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, obj.elements)

    def as_dict(self):
        return dict(zip(self.dom.elements, self.table))

    def image(self):
        return set(self.table)

    def is_injective(self):
        return len(set(self.table)) == len(self.table)

    def is_surjective(self):
        return self.image() == set(self.cod.elements)


@dataclass(frozen=True)
class BaseCone:
    """Limit cone: legs run from the apex into the diagram."""

    kind: str
    apex: BaseObject
    legs: tuple


@dataclass(frozen=True)
class BaseCocone:
    """Colimit cocone: legs run from the diagram into the apex."""

    kind: str
    apex: BaseObject
    legs: tuple


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on a carrier.

    ``block_of`` is aligned with ``carrier.elements`` and names each block by its
    least member in carrier order.
    """

    carrier: BaseObject
    block_of: tuple

    def __post_init__(self):
        if len(self.block_of) != self.carrier.size:
            raise InvariantViolation('Partition does not cover its carrier')
        for position, representative in enumerate(self.block_of):
            if representative not in self.carrier.index:
                raise InvariantViolation(f'Block identifier {representative} is not a carrier element')
            at = self.carrier.index[representative]
            if at > position or self.block_of[at] != representative:
                raise InvariantViolation(f'{representative} is not the least member of its block')

    @classmethod
    def from_key(cls, carrier, key):
        """Group carrier elements by ``key``; each block is named by its first member."""
        first = {}
        block_of = []
        for x in carrier.elements:
            block_of.append(first.setdefault(key(x), x))
        return cls(carrier, tuple(block_of))

    @classmethod
    def discrete(cls, carrier):
        return cls(carrier, carrier.elements)

    def block(self, x):
        return self.block_of[self.carrier.index[x]]

    def representative(self, block):
        if self.block(block) != block:
            raise InvariantViolation(f'{block} does not name a block')
        return block

    @cached_property
    def blocks(self):
        members = {}
        for x, representative in zip(self.carrier.elements, self.block_of):
            members.setdefault(representative, []).append(x)
        return tuple(tuple(group) for group in members.values())

    @property
    def size(self):
        return len(self.blocks)

    def is_discrete(self):
        return self.size == self.carrier.size

    def refines(self, other):
        return all(len({other.block(x) for x in group}) == 1 for group in self.blocks)

    def to_list(self):
        return [list(group) for group in self.blocks]
