"""
Functors between base categories and adjunctions given by their transposes.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from fmachina.config import current_config
from fmachina.models.base import BaseCategory, BaseMorphism
from fmachina.utils.encoding import canonical_json
from fmachina.utils.errors import CompositionError, InvariantViolation


@dataclass(frozen=True, eq=False)
class EndofunctorValue:
    """Tabulated functor K -> K' (an endofunctor when source equals target).

    Object images are memoized up to MEMO_SIZE, oldest first out; element
    encodings are fixed per instance.
    """

    name: str
    source: BaseCategory
    target: BaseCategory
    object_map: Callable = field(repr=False)
    morphism_map: Callable = field(repr=False)
    _objects: dict = field(default_factory=dict, repr=False)

    def on_object(self, obj):
        if not self.source.contains(obj):
            raise InvariantViolation(f'{self.name} expects an object of {self.source.kind}')
        image = self._objects.get(obj)
        if image is None:
            if len(self._objects) >= current_config().MEMO_SIZE:
                self._objects.pop(next(iter(self._objects)))
            image = self._objects[obj] = self.object_map(obj)
        return image

    def on_morphism(self, f):
        image = self.morphism_map(f)
        if image.dom != self.on_object(f.dom) or image.cod != self.on_object(f.cod):
            raise InvariantViolation(f'{self.name} sent a morphism to the wrong endpoints')
        return image

    def iterate_object(self, obj, times):
        for _ in range(times):
            obj = self.on_object(obj)
        return obj

    def iterate_morphism(self, f, times):
        for _ in range(times):
            f = self.on_morphism(f)
        return f

    @property
    def is_endo(self):
        return self.source == self.target


@dataclass(frozen=True, eq=False)
class AdjunctionValue:
    """F -| R represented by the two directions of the hom-set bijection.

    Two adjunctions are equal when their specs and base categories agree.
    """

    spec: dict
    left: EndofunctorValue
    right: EndofunctorValue
    transpose_map: Callable = field(repr=False)
    transpose_inv_map: Callable = field(repr=False)

    @cached_property
    def key(self):
        return canonical_json({
            'spec': self.spec,
            'source': self.left.source.to_dict(),
            'target': self.left.target.to_dict()
        })

    def __eq__(self, other):
        return isinstance(other, AdjunctionValue) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def kind(self):
        return self.spec['kind']

    @property
    def base(self):
        return self.left.source

    @property
    def is_endo(self):
        return self.left.is_endo and self.right.is_endo

    def transpose(self, g, source):
        """
        Mate of g : F source -> Y, a morphism source -> R Y.

        Args:
            g (BaseMorphism): Morphism out of F(source)
            source (BaseObject): The object X with g.dom = F X

        Returns:
            BaseMorphism: X -> R(g.cod)
        """
        if g.dom != self.left.on_object(source):
            raise CompositionError(f'Transpose expects a morphism out of {self.left.name}(X)')
        return self.transpose_map(g, source)

    def transpose_inv(self, h, target):
        """
        Mate of h : X -> R target, a morphism F X -> target.

        Args:
            h (BaseMorphism): Morphism into R(target)
            target (BaseObject): The object Y with h.cod = R Y

        Returns:
            BaseMorphism: F(h.dom) -> Y
        """
        if h.cod != self.right.on_object(target):
            raise CompositionError(f'Inverse transpose expects a morphism into {self.right.name}(Y)')
        return self.transpose_inv_map(h, target)

    def unit(self, obj):
        return self.transpose(BaseMorphism.identity(self.left.on_object(obj)), obj)

    def counit(self, obj):
        return self.transpose_inv(BaseMorphism.identity(self.right.on_object(obj)), obj)
