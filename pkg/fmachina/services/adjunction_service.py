"""
Adjunction service: builtin adjunctions, composition, iteration and base change.
"""
import dataclasses
import itertools
import logging
from functools import lru_cache

from fmachina.config import current_config
from fmachina.models.adjunction import AdjunctionValue, EndofunctorValue
from fmachina.models.base import BaseCategory, BaseMorphism, BaseObject, MonoidHom
from fmachina.services.base_service import BaseCategoryService
from fmachina.utils.encoding import encode_function, encode_tuple
from fmachina.utils.errors import (
    CompositionError,
    DiagramError,
    InvariantViolation,
    UnknownAdjunctionError
)
from fmachina.utils.union_find import UnionFind

log = logging.getLogger(__name__)


def _parts(adjunction):
    if adjunction.kind == 'composite':
        return list(adjunction.spec['parts'])
    return [adjunction.spec]


class AdjunctionService:
    """Service class for adjunctions F -| R on the base categories."""

    @staticmethod
    def identity(category):
        functor = EndofunctorValue('identity', category, category, lambda obj: obj, lambda f: f)
        return AdjunctionValue(
            {'kind': 'identity'}, functor, functor,
            lambda g, source: g,
            lambda h, target: h
        )

    @staticmethod
    def product_exponential(category, inputs):
        """
        The adjunction (-)xI -| (-)^I.

        F X has elements ``(x,i)`` (x-major); R Y has elements ``[y_i0,y_i1,...]``
        listed lexicographically. Over M-sets, I carries the trivial action.

        Args:
            category (BaseCategory): Base category
            inputs (BaseObject): Plain input alphabet I

        Returns:
            AdjunctionValue: The product/exponential adjunction
        """
        if inputs.monoid is not None:
            raise InvariantViolation('The input alphabet must be a plain finite set')
        monoid = category.monoid
        letters = inputs.elements
        position = inputs.index

        def product_object(obj):
            BaseCategoryService.check_object_size(obj.size * len(letters), 'F X')
            elements = tuple(encode_tuple((x, i)) for x in obj.elements for i in letters)
            if monoid is None:
                return BaseObject(elements)
            action = tuple(
                tuple(encode_tuple((obj.act(m, x), i)) for x in obj.elements for i in letters)
                for m in monoid.elements
            )
            return BaseObject(elements, monoid, action)

        def product_morphism(f):
            table = tuple(encode_tuple((f(x), i)) for x in f.dom.elements for i in letters)
            return BaseMorphism(left.on_object(f.dom), left.on_object(f.cod), table)

        @lru_cache(maxsize=current_config().MEMO_SIZE)
        def functions(obj):
            BaseCategoryService.check_object_size(obj.size ** len(letters), 'R Y')
            return {encode_function(values): values for values in itertools.product(obj.elements, repeat=len(letters))}

        def exponential_object(obj):
            table = functions(obj)
            if monoid is None:
                return BaseObject(tuple(table))
            return BaseObject.build(
                table, monoid,
                lambda m, code: encode_function(tuple(obj.act(m, y) for y in table[code]))
            )

        def exponential_morphism(g):
            table = functions(g.dom)
            return BaseMorphism(
                right.on_object(g.dom), right.on_object(g.cod),
                tuple(encode_function(tuple(g(y) for y in values)) for values in table.values())
            )

        def transpose(g, source):
            return BaseMorphism(
                source, right.on_object(g.cod),
                tuple(encode_function(tuple(g(encode_tuple((x, i))) for i in letters)) for x in source.elements)
            )

        def transpose_inv(h, target):
            table = functions(target)
            return BaseMorphism(
                left.on_object(h.dom), target,
                tuple(table[h(x)][position[i]] for x in h.dom.elements for i in letters)
            )

        left = EndofunctorValue('product', category, category, product_object, product_morphism)
        right = EndofunctorValue('exponential', category, category, exponential_object, exponential_morphism)
        spec = {'kind': 'product-exponential', 'input': list(letters)}
        return AdjunctionValue(spec, left, right, transpose, transpose_inv)

    @staticmethod
    def base_change(hom):
        """
        The adjoint triple f_! -| f* -| f_* induced by a monoid homomorphism f : M -> N.

        f* restricts an N-set along f. f_!(X) is (N x X)/~ with (n f(m), x) ~ (n, m x),
        each class written as its least pair ``(n,x)``. f_*(X) is the set of M-equivariant
        maps h : N -> X, written ``[h(n0),h(n1),...]``, with (n' h)(n) = h(n n').

        Args:
            hom (MonoidHom): The homomorphism f

        Returns:
            tuple: (lower f_! -| f*, upper f* -| f_*)
        """
        source, target = hom.dom, hom.cod
        m_sets, n_sets = BaseCategory(source), BaseCategory(target)
        hom_spec = hom.to_dict()

        def restrict_object(obj):
            return BaseObject.build(obj.elements, source, lambda m, y: obj.act(hom(m), y))

        def restrict_morphism(g):
            return BaseMorphism(restriction.on_object(g.dom), restriction.on_object(g.cod), g.table)

        @lru_cache(maxsize=current_config().MEMO_SIZE)
        def classes(obj):
            BaseCategoryService.check_object_size(target.size * obj.size, 'f_!(X)')
            pairs = [(n, x) for n in target.elements for x in obj.elements]
            relation = UnionFind(pairs)
            for n in target.elements:
                for m in source.elements:
                    for x in obj.elements:
                        relation.union((target.multiply(n, hom(m)), x), (n, obj.act(m, x)))
            roots = relation.classes()
            code_of = {pair: encode_tuple(roots[pair]) for pair in pairs}
            pair_of = {encode_tuple(pair): pair for pair in pairs if roots[pair] == pair}
            return code_of, pair_of

        def induce_object(obj):
            code_of, pair_of = classes(obj)

            def act(n, code):
                k, x = pair_of[code]
                return code_of[(target.multiply(n, k), x)]

            return BaseObject.build(pair_of, target, act)

        def induce_morphism(g):
            _, pair_of = classes(g.dom)
            code_of, _ = classes(g.cod)
            return BaseMorphism(
                induction.on_object(g.dom), induction.on_object(g.cod),
                tuple(code_of[(n, g(x))] for n, x in pair_of.values())
            )

        @lru_cache(maxsize=current_config().MEMO_SIZE)
        def equivariant_maps(obj):
            BaseCategoryService.check_object_size(obj.size ** target.size, 'f_*(X) candidates')
            position = target.index
            maps = {}
            for values in itertools.product(obj.elements, repeat=target.size):
                if all(
                    values[position[target.multiply(hom(m), n)]] == obj.act(m, values[position[n]])
                    for m in source.elements
                    for n in target.elements
                ):
                    maps[encode_function(values)] = values
            return maps

        def coinduce_object(obj):
            maps = equivariant_maps(obj)
            position = target.index

            def act(n_prime, code):
                values = maps[code]
                return encode_function(tuple(values[position[target.multiply(n, n_prime)]] for n in target.elements))

            return BaseObject.build(maps, target, act)

        def coinduce_morphism(g):
            maps = equivariant_maps(g.dom)
            return BaseMorphism(
                coinduction.on_object(g.dom), coinduction.on_object(g.cod),
                tuple(encode_function(tuple(g(x) for x in values)) for values in maps.values())
            )

        restriction = EndofunctorValue('restriction', n_sets, m_sets, restrict_object, restrict_morphism)
        induction = EndofunctorValue('induction', m_sets, n_sets, induce_object, induce_morphism)
        coinduction = EndofunctorValue('coinduction', m_sets, n_sets, coinduce_object, coinduce_morphism)

        def lower_transpose(g, source_obj):
            code_of, _ = classes(source_obj)
            return BaseMorphism(
                source_obj, restriction.on_object(g.cod),
                tuple(g(code_of[(target.unit, x)]) for x in source_obj.elements)
            )

        def lower_transpose_inv(h, target_obj):
            _, pair_of = classes(h.dom)
            return BaseMorphism(
                induction.on_object(h.dom), target_obj,
                tuple(target_obj.act(n, h(x)) for n, x in pair_of.values())
            )

        def upper_transpose(g, source_obj):
            return BaseMorphism(
                source_obj, coinduction.on_object(g.cod),
                tuple(
                    encode_function(tuple(g(source_obj.act(n, y)) for n in target.elements))
                    for y in source_obj.elements
                )
            )

        def upper_transpose_inv(h, target_obj):
            maps = equivariant_maps(target_obj)
            unit = target.index[target.unit]
            return BaseMorphism(
                restriction.on_object(h.dom), target_obj,
                tuple(maps[h(y)][unit] for y in h.dom.elements)
            )

        lower = AdjunctionValue(
            {'kind': 'base-change-induction', 'hom': hom_spec},
            induction, restriction, lower_transpose, lower_transpose_inv
        )
        upper = AdjunctionValue(
            {'kind': 'base-change-coinduction', 'hom': hom_spec},
            restriction, coinduction, upper_transpose, upper_transpose_inv
        )
        return lower, upper

    @staticmethod
    def compose_adjunctions(outer, inner, spec=None):
        """
        Compose F1 -| R1 (inner) with F2 -| R2 (outer) into F2F1 -| R1R2.

        Args:
            outer (AdjunctionValue): Applied second on the left
            inner (AdjunctionValue): Applied first on the left
            spec (dict): Spec to record; defaults to a flattened composite

        Returns:
            AdjunctionValue: The composite adjunction
        """
        if inner.left.target != outer.left.source:
            raise CompositionError('Adjunctions live over different base categories')
        left = EndofunctorValue(
            f'{outer.left.name}.{inner.left.name}', inner.left.source, outer.left.target,
            lambda obj: outer.left.on_object(inner.left.on_object(obj)),
            lambda f: outer.left.on_morphism(inner.left.on_morphism(f))
        )
        right = EndofunctorValue(
            f'{inner.right.name}.{outer.right.name}', outer.right.source, inner.right.target,
            lambda obj: inner.right.on_object(outer.right.on_object(obj)),
            lambda g: inner.right.on_morphism(outer.right.on_morphism(g))
        )

        def transpose(g, source):
            return inner.transpose(outer.transpose(g, inner.left.on_object(source)), source)

        def transpose_inv(h, target):
            return outer.transpose_inv(inner.transpose_inv(h, outer.right.on_object(target)), target)

        if spec is None:
            spec = {'kind': 'composite', 'parts': _parts(inner) + _parts(outer)}
        return AdjunctionValue(spec, left, right, transpose, transpose_inv)

    @staticmethod
    def iterate_adjunction(adjunction, times):
        """
        The n-fold composite F^n -| R^n.

        Args:
            adjunction (AdjunctionValue): F -| R on one base category
            times (int): n >= 1

        Returns:
            AdjunctionValue: F^n -| R^n, the input itself for n = 1
        """
        if times < 1:
            raise DiagramError('Iterated adjunctions need n >= 1')
        if not adjunction.is_endo:
            raise CompositionError('Only endofunctor adjunctions can be iterated')
        result = adjunction
        for _ in range(times - 1):
            result = AdjunctionService.compose_adjunctions(adjunction, result)
        return result

    @staticmethod
    def adj_unit(adjunction, obj):
        return adjunction.unit(obj)

    @staticmethod
    def adj_counit(adjunction, obj):
        return adjunction.counit(obj)

    @staticmethod
    def builtin_adjunction(spec, category):
        """
        Build a builtin adjunction from its document spec.

        Args:
            spec (dict): identity, product-exponential, composite,
                base-change-comonadic or base-change-monadic
            category (BaseCategory): Base category of the machines

        Returns:
            AdjunctionValue: The adjunction, recording ``spec`` verbatim
        """
        kind = spec.get('kind')

        if kind == 'identity':
            return AdjunctionService.identity(category)

        if kind == 'product-exponential':
            return AdjunctionService.product_exponential(category, BaseObject(tuple(spec['input'])))

        if kind == 'composite':
            parts = [AdjunctionService.builtin_adjunction(part, category) for part in spec['parts']]
            if not parts:
                raise UnknownAdjunctionError('A composite needs at least one part')
            result = parts[0]
            for part in parts[1:]:
                result = AdjunctionService.compose_adjunctions(part, result)
            return dataclasses.replace(result, spec=spec)

        if kind in ('base-change-comonadic', 'base-change-monadic'):
            hom = MonoidHom.from_dict(spec['hom'])
            lower, upper = AdjunctionService.base_change(hom)
            if kind == 'base-change-comonadic':
                if category.monoid != hom.cod:
                    raise DiagramError('base-change-comonadic acts on sets over the codomain monoid')
                result = AdjunctionService.compose_adjunctions(lower, upper)
            else:
                if category.monoid != hom.dom:
                    raise DiagramError('base-change-monadic acts on sets over the domain monoid')
                result = AdjunctionService.compose_adjunctions(upper, lower)
            return dataclasses.replace(result, spec=spec)

        raise UnknownAdjunctionError(f'Unknown adjunction kind {kind!r}')
