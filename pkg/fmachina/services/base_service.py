"""
Base category service: composition, hom-set enumeration, finite limits and colimits.
"""
import itertools
import logging

from fmachina.config import current_config
from fmachina.models.base import (
    BaseCocone,
    BaseCone,
    BaseMorphism,
    BaseObject,
    Partition,
    equivariance_violations
)
from fmachina.utils.encoding import encode_left, encode_right, encode_tuple
from fmachina.utils.errors import (
    CompositionError,
    DiagramError,
    EnumerationTooLarge,
    InternalInvariantError,
    InvariantViolation,
    SizeGuardExceeded
)
from fmachina.utils.union_find import UnionFind

log = logging.getLogger(__name__)


def _describe(obj):
    shown = ', '.join(obj.elements[:6])
    if obj.size > 6:
        shown += ', ...'
    return f'{obj.kind} {{{shown}}}'


class BaseCategoryService:
    """Service class for the base category K."""

    @staticmethod
    def compose(g, f):
        """
        Compose two morphisms.

        Args:
            g (BaseMorphism): Second morphism
            f (BaseMorphism): First morphism, with f.cod equal to g.dom

        Returns:
            BaseMorphism: g after f
        """
        if f.cod != g.dom:
            raise CompositionError(
                f'Cannot compose: codomain {_describe(f.cod)} differs from domain {_describe(g.dom)}'
            )
        return BaseMorphism(f.dom, g.cod, tuple(g(y) for y in f.table))

    @staticmethod
    def compose_all(*morphisms):
        """Compose right to left: compose_all(h, g, f) is h after g after f."""
        result = morphisms[-1]
        for morphism in reversed(morphisms[:-1]):
            result = BaseCategoryService.compose(morphism, result)
        return result

    @staticmethod
    def identity(obj):
        return BaseMorphism.identity(obj)

    @staticmethod
    def check_object_size(size, what):
        """
        Raise when a materialized object would exceed the configured bound.

        Args:
            size (int): Number of elements about to be materialized
            what (str): Description for the error report
        """
        bound = current_config().OBJECT_SIZE_BOUND
        if size > bound:
            raise SizeGuardExceeded(f'{what} would have {size} elements', size=size, bound=bound)

    @staticmethod
    def enumerate_hom(dom, cod, bound=None):
        """
        Enumerate all morphisms between two objects.

        Tables are produced in lexicographic order over the codomain's element
        order; only equivariant tables survive for M-sets.

        Args:
            dom (BaseObject): Domain
            cod (BaseObject): Codomain
            bound (int): Maximum number of candidate tables

        Returns:
            list: Morphisms dom -> cod
        """
        bound = current_config().ENUMERATION_BOUND if bound is None else bound
        candidates = cod.size ** dom.size
        if candidates > bound:
            raise EnumerationTooLarge(
                f'Hom-set enumeration needs {candidates} candidate tables',
                size=candidates, bound=bound
            )
        if dom.monoid != cod.monoid:
            raise DiagramError('Hom-set endpoints live in different base categories')
        morphisms = []
        for table in itertools.product(cod.elements, repeat=dom.size):
            if not equivariance_violations(dom, cod, table):
                morphisms.append(BaseMorphism(dom, cod, table))
        return morphisms

    @staticmethod
    def enumerate_objects(category, size, bound=None):
        """
        Enumerate every object of a category on the carrier ``s0..s{size-1}``.

        Args:
            category (BaseCategory): Base category
            size (int): Number of elements
            bound (int): Maximum number of candidate action tables

        Returns:
            list: Objects, one per valid action
        """
        elements = tuple(f's{k}' for k in range(size))
        monoid = category.monoid
        if monoid is None:
            return [BaseObject(elements)]
        bound = current_config().ENUMERATION_BOUND if bound is None else bound
        others = [m for m in monoid.elements if m != monoid.unit]
        candidates = size ** (size * len(others))
        if candidates > bound:
            raise EnumerationTooLarge(
                f'Action enumeration needs {candidates} candidate tables',
                size=candidates, bound=bound
            )
        objects = []
        for rows in itertools.product(itertools.product(elements, repeat=size), repeat=len(others)):
            chosen = dict(zip(others, rows))
            action = tuple(
                elements if m == monoid.unit else chosen[m]
                for m in monoid.elements
            )
            try:
                objects.append(BaseObject(elements, monoid, action))
            except InvariantViolation:
                continue
        return objects

    @staticmethod
    def product(objects):
        """
        N-ary product.

        One factor gives the object itself and two or more factors the tuples
        ``(x1,...,xk)``. The empty product is the terminal kind of base_limit.

        Args:
            objects (Sequence[BaseObject]): Factors

        Returns:
            BaseCone: Apex with its projections
        """
        objects = list(objects)
        if len(objects) == 1:
            return BaseCone('product', objects[0], (BaseMorphism.identity(objects[0]),))
        if not objects:
            raise DiagramError('Use the terminal kind for the empty product')
        monoid = objects[0].monoid
        if any(obj.monoid != monoid for obj in objects):
            raise DiagramError('Product factors live in different base categories')
        size = 1
        for obj in objects:
            size *= obj.size
        BaseCategoryService.check_object_size(size, 'Product')

        tuples = list(itertools.product(*(obj.elements for obj in objects)))
        encoded = {components: encode_tuple(components) for components in tuples}
        decoded = {code: components for components, code in encoded.items()}

        def act(m, x):
            return encoded[tuple(obj.act(m, c) for obj, c in zip(objects, decoded[x]))]

        apex = BaseObject.build([encoded[components] for components in tuples], monoid, act)
        legs = tuple(
            BaseMorphism(apex, obj, tuple(decoded[x][position] for x in apex.elements))
            for position, obj in enumerate(objects)
        )
        return BaseCone('product', apex, legs)

    @staticmethod
    def tuple_into_product(cone, maps):
        """
        Mediating morphism into a product cone.

        Args:
            cone (BaseCone): Product cone from ``product``
            maps (Sequence[BaseMorphism]): One map per factor, sharing a domain

        Returns:
            BaseMorphism: The unique map commuting with the projections
        """
        maps = list(maps)
        if len(maps) != len(cone.legs):
            raise DiagramError('Need one map per product factor')
        if len(maps) == 1:
            return maps[0]
        dom = maps[0].dom
        lookup = {tuple(leg(x) for leg in cone.legs): x for x in cone.apex.elements}
        return BaseMorphism(dom, cone.apex, tuple(lookup[tuple(f(z) for f in maps)] for z in dom.elements))

    @staticmethod
    def copair(cocone, maps):
        """
        Mediating morphism out of a coproduct cocone.

        Args:
            cocone (BaseCocone): Coproduct cocone from ``base_colimit``
            maps (Sequence[BaseMorphism]): One map per summand, sharing a codomain

        Returns:
            BaseMorphism: The unique map commuting with the injections
        """
        maps = list(maps)
        if len(maps) != len(cocone.legs):
            raise DiagramError('Need one map per coproduct summand')
        cod = maps[0].cod
        mapping = {}
        for leg, f in zip(cocone.legs, maps):
            if f.dom != leg.dom or f.cod != cod:
                raise DiagramError('Copairing maps do not match the summands')
            for x in leg.dom.elements:
                mapping[leg(x)] = f(x)
        return BaseMorphism.from_mapping(cocone.apex, cod, mapping)

    @staticmethod
    def base_limit(kind, data):
        """
        Compute a finite limit.

        Args:
            kind (str): product, equalizer, pullback or terminal
            data: Factors (product), a parallel pair (equalizer), a cospan
                (pullback) or a BaseCategory (terminal)

        Returns:
            BaseCone: Apex with its legs
        """
        if kind == 'terminal':
            apex = data.terminal()
            return BaseCone('terminal', apex, ())

        if kind == 'product':
            return BaseCategoryService.product(data)

        if kind == 'equalizer':
            f, g = data
            if f.dom != g.dom or f.cod != g.cod:
                raise DiagramError('Equalizer needs a parallel pair')
            apex = f.dom.subobject(x for x in f.dom.elements if f(x) == g(x))
            inclusion = BaseMorphism(apex, f.dom, apex.elements)
            return BaseCone('equalizer', apex, (inclusion,))

        if kind == 'pullback':
            f, g = data
            if f.cod != g.cod:
                raise DiagramError('Pullback needs a common codomain')
            cone = BaseCategoryService.product([f.dom, g.dom])
            left, right = cone.legs
            apex = cone.apex.subobject(x for x in cone.apex.elements if f(left(x)) == g(right(x)))
            legs = (
                BaseMorphism(apex, f.dom, tuple(left(x) for x in apex.elements)),
                BaseMorphism(apex, g.dom, tuple(right(x) for x in apex.elements))
            )
            return BaseCone('pullback', apex, legs)

        raise DiagramError(f'Unknown limit kind {kind}')

    @staticmethod
    def base_colimit(kind, data):
        """
        Compute a finite colimit.

        Args:
            kind (str): coproduct, coequalizer, initial or quotient
            data: A pair of objects (coproduct), a parallel pair (coequalizer),
                a BaseCategory (initial) or a Partition (quotient)

        Returns:
            BaseCocone: Apex with its legs
        """
        if kind == 'initial':
            return BaseCocone('initial', data.initial(), ())

        if kind == 'coproduct':
            left, right = data
            if left.monoid != right.monoid:
                raise DiagramError('Coproduct summands live in different base categories')
            elements = [encode_left(x) for x in left.elements] + [encode_right(y) for y in right.elements]

            def act(m, code):
                if code.startswith('inl('):
                    return encode_left(left.act(m, code[4:-1]))
                return encode_right(right.act(m, code[4:-1]))

            apex = BaseObject.build(elements, left.monoid, act)
            legs = (
                BaseMorphism(left, apex, tuple(encode_left(x) for x in left.elements)),
                BaseMorphism(right, apex, tuple(encode_right(y) for y in right.elements))
            )
            return BaseCocone('coproduct', apex, legs)

        if kind == 'coequalizer':
            f, g = data
            if f.dom != g.dom or f.cod != g.cod:
                raise DiagramError('Coequalizer needs a parallel pair')
            classes = UnionFind(f.cod.elements)
            for x in f.dom.elements:
                classes.union(f(x), g(x))
            if f.cod.monoid is not None:
                # close the relation under the action until it is a congruence
                changed = True
                while changed:
                    changed = False
                    roots = classes.classes()
                    for m in f.cod.monoid.elements:
                        for y in f.cod.elements:
                            if classes.union(f.cod.act(m, y), f.cod.act(m, roots[y])):
                                changed = True
            partition = Partition(f.cod, tuple(classes.classes()[y] for y in f.cod.elements))
            cocone = BaseCategoryService.base_colimit('quotient', partition)
            return BaseCocone('coequalizer', cocone.apex, cocone.legs)

        if kind == 'quotient':
            partition = data
            carrier = partition.carrier
            representatives = [group[0] for group in partition.blocks]

            def act(m, representative):
                return partition.block(carrier.act(m, representative))

            if carrier.monoid is not None:
                for m in carrier.monoid.elements:
                    for x in carrier.elements:
                        if partition.block(carrier.act(m, x)) != act(m, partition.block(x)):
                            raise DiagramError(f'Partition is not a congruence at ({m},{x})')
            apex = BaseObject.build(representatives, carrier.monoid, act)
            leg = BaseMorphism(carrier, apex, partition.block_of)
            return BaseCocone('quotient', apex, (leg,))

        raise DiagramError(f'Unknown colimit kind {kind}')

    @staticmethod
    def factor_through_epi(epi, g):
        """
        Induce h with h after epi equal to g.

        Args:
            epi (BaseMorphism): Surjective map X -> Q
            g (BaseMorphism): Map X -> Y constant on the fibres of epi

        Returns:
            BaseMorphism: Q -> Y
        """
        if epi.dom != g.dom:
            raise DiagramError('Factorization needs a common domain')
        induced = {}
        for x in epi.dom.elements:
            q, y = epi(x), g(x)
            if induced.setdefault(q, y) != y:
                raise InternalInvariantError(f'Induced map is not well defined at {q}')
        missing = [q for q in epi.cod.elements if q not in induced]
        if missing:
            raise InternalInvariantError(f'Map is not surjective; {missing[0]} has no preimage')
        return BaseMorphism.from_mapping(epi.cod, g.cod, induced)

    @staticmethod
    def factor_through_mono(mono, g):
        """
        Induce h with mono after h equal to g.

        Args:
            mono (BaseMorphism): Injective map S -> X
            g (BaseMorphism): Map Z -> X landing in the image of mono

        Returns:
            BaseMorphism: Z -> S
        """
        if mono.cod != g.cod:
            raise DiagramError('Factorization needs a common codomain')
        preimage = {}
        for s in mono.dom.elements:
            if preimage.setdefault(mono(s), s) != s:
                raise InternalInvariantError('Map is not injective')
        table = []
        for z in g.dom.elements:
            if g(z) not in preimage:
                raise InternalInvariantError(f'{g(z)} lies outside the subobject')
            table.append(preimage[g(z)])
        return BaseMorphism(g.dom, mono.dom, tuple(table))

    @staticmethod
    def invert(bijection):
        """Inverse of a bijective morphism."""
        if not (bijection.is_injective() and bijection.is_surjective()):
            raise InternalInvariantError('Canonical comparison map is not a bijection')
        inverse = {y: x for x, y in bijection.as_dict().items()}
        return BaseMorphism.from_mapping(bijection.cod, bijection.dom, inverse)
