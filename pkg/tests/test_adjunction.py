"""
Test cases for builtin adjunctions, their composition and iteration.
"""
import pytest

from fmachina.config import current_config
from fmachina.models.base import BaseCategory, BaseMorphism, BaseObject, FiniteMonoid, MonoidHom
from fmachina.services.adjunction_service import AdjunctionService
from fmachina.services.base_service import BaseCategoryService
from fmachina.utils.encoding import decode_term, encode_function, encode_tuple
from fmachina.utils.errors import CompositionError, DiagramError, UnknownAdjunctionError

Z2 = FiniteMonoid.cyclic(2)
TRIVIAL = FiniteMonoid.trivial()
BITS = {'kind': 'product-exponential', 'input': ['0', '1']}
HOM = {
    'dom': TRIVIAL.to_dict(),
    'cod': Z2.to_dict(),
    'table': {'1': '0'}
}


def plain_objects(sizes=(1, 2, 3)):
    return [BaseCategoryService.enumerate_objects(BaseCategory(), n)[0] for n in sizes]


def z2_objects(sizes=(1, 2)):
    return [obj for n in sizes for obj in BaseCategoryService.enumerate_objects(BaseCategory(Z2), n)]


def law_violations(adjunction, sources, targets):
    """Transpose round trips over whole hom-sets plus both triangle identities."""
    compose = BaseCategoryService.compose
    left, right = adjunction.left, adjunction.right
    violations = []
    for x in sources:
        for y in targets:
            for g in BaseCategoryService.enumerate_hom(left.on_object(x), y):
                if adjunction.transpose_inv(adjunction.transpose(g, x), y) != g:
                    violations.append(('transpose', x.elements, y.elements, g.table))
            for h in BaseCategoryService.enumerate_hom(x, right.on_object(y)):
                if adjunction.transpose(adjunction.transpose_inv(h, y), x) != h:
                    violations.append(('transpose_inv', x.elements, y.elements, h.table))
    for x in sources:
        fx = left.on_object(x)
        if compose(adjunction.counit(fx), left.on_morphism(adjunction.unit(x))) != BaseMorphism.identity(fx):
            violations.append(('left triangle', x.elements))
    for y in targets:
        ry = right.on_object(y)
        if compose(right.on_morphism(adjunction.counit(y)), adjunction.unit(ry)) != BaseMorphism.identity(ry):
            violations.append(('right triangle', y.elements))
    return violations


def test_identity_laws():
    adjunction = AdjunctionService.identity(BaseCategory())
    objects = plain_objects()
    assert law_violations(adjunction, objects, objects) == []


@pytest.mark.parametrize('letters', [['a'], ['0', '1']])
def test_product_exponential_laws(letters):
    adjunction = AdjunctionService.builtin_adjunction(
        {'kind': 'product-exponential', 'input': letters}, BaseCategory()
    )
    assert law_violations(adjunction, plain_objects(), plain_objects((1, 2))) == []


def test_product_exponential_encodings():
    adjunction = AdjunctionService.builtin_adjunction(BITS, BaseCategory())
    x = BaseObject(('p0', 'p1'))
    assert adjunction.left.on_object(x).elements == ('(p0,0)', '(p0,1)', '(p1,0)', '(p1,1)')
    assert adjunction.right.on_object(x).elements == ('[p0,p0]', '[p0,p1]', '[p1,p0]', '[p1,p1]')
    assert adjunction.unit(x).table == ('[(p0,0),(p0,1)]', '[(p1,0),(p1,1)]')
    assert adjunction.counit(x)('([p0,p1],1)') == 'p1'


def test_composite_laws_and_spec():
    spec = {'kind': 'composite', 'parts': [BITS, {'kind': 'product-exponential', 'input': ['a']}]}
    adjunction = AdjunctionService.builtin_adjunction(spec, BaseCategory())
    assert adjunction.spec == spec
    assert adjunction.left.on_object(BaseObject(('e',))).elements == ('((e,0),a)', '((e,1),a)')
    assert law_violations(adjunction, plain_objects(), plain_objects((1, 2))) == []


def test_compose_flattens_parts_first_applied_first():
    category = BaseCategory()
    inner = AdjunctionService.builtin_adjunction(BITS, category)
    outer = AdjunctionService.identity(category)
    composite = AdjunctionService.compose_adjunctions(outer, inner)
    assert composite.spec == {'kind': 'composite', 'parts': [BITS, {'kind': 'identity'}]}
    twice = AdjunctionService.compose_adjunctions(composite, composite)
    assert [part['kind'] for part in twice.spec['parts']] == [
        'product-exponential', 'identity', 'product-exponential', 'identity'
    ]


def test_base_change_comonadic_laws():
    spec = {'kind': 'base-change-comonadic', 'hom': HOM}
    adjunction = AdjunctionService.builtin_adjunction(spec, BaseCategory(Z2))
    objects = z2_objects()
    assert law_violations(adjunction, objects, objects) == []


def test_base_change_induction_names_least_pairs():
    adjunction = AdjunctionService.builtin_adjunction(
        {'kind': 'base-change-comonadic', 'hom': HOM}, BaseCategory(Z2)
    )
    swap = BaseObject.build(('x', 'y'), Z2, lambda m, v: v if m == '0' else {'x': 'y', 'y': 'x'}[v])
    induced = adjunction.left.on_object(swap)
    assert induced.elements == ('(0,x)', '(0,y)', '(1,x)', '(1,y)')
    assert induced.act('1', '(0,x)') == '(1,x)'
    # f_* f* Y: every map Z/2 -> Y, since the trivial monoid imposes nothing
    assert adjunction.right.on_object(swap).size == 4


def test_base_change_monadic_laws():
    spec = {'kind': 'base-change-monadic', 'hom': HOM}
    category = BaseCategory(TRIVIAL)
    adjunction = AdjunctionService.builtin_adjunction(spec, category)
    objects = [category.make_object(('a',)), category.make_object(('a', 'b'))]
    assert adjunction.left.on_object(objects[1]).size == 4
    assert law_violations(adjunction, objects, objects[:1]) == []


def test_base_change_checks_the_category():
    with pytest.raises(DiagramError):
        AdjunctionService.builtin_adjunction({'kind': 'base-change-comonadic', 'hom': HOM}, BaseCategory())
    with pytest.raises(DiagramError):
        AdjunctionService.builtin_adjunction({'kind': 'base-change-monadic', 'hom': HOM}, BaseCategory(Z2))


def test_iterate_adjunction():
    adjunction = AdjunctionService.builtin_adjunction(BITS, BaseCategory())
    twice = AdjunctionService.iterate_adjunction(adjunction, 2)
    assert twice.left.on_object(BaseObject(('e',))).elements == ('((e,0),0)', '((e,0),1)', '((e,1),0)', '((e,1),1)')
    assert AdjunctionService.iterate_adjunction(adjunction, 1) is adjunction
    with pytest.raises(DiagramError):
        AdjunctionService.iterate_adjunction(adjunction, 0)


def test_iterate_rejects_non_endofunctors():
    lower, _ = AdjunctionService.base_change(MonoidHom.from_dict(HOM))
    with pytest.raises(CompositionError):
        AdjunctionService.iterate_adjunction(lower, 2)


def test_unknown_adjunction_kind():
    with pytest.raises(UnknownAdjunctionError):
        AdjunctionService.builtin_adjunction({'kind': 'powerset'}, BaseCategory())


def test_adjunction_equality_is_by_spec():
    first = AdjunctionService.builtin_adjunction(BITS, BaseCategory())
    second = AdjunctionService.builtin_adjunction(dict(BITS), BaseCategory())
    assert first == second
    assert first != AdjunctionService.builtin_adjunction(BITS, BaseCategory(Z2))


def test_functors_preserve_identities_and_composition():
    compose = BaseCategoryService.compose
    adjunction = AdjunctionService.builtin_adjunction(BITS, BaseCategory())
    a, b = plain_objects((2, 3))
    for functor in (adjunction.left, adjunction.right):
        assert functor.on_morphism(BaseMorphism.identity(a)) == BaseMorphism.identity(functor.on_object(a))
        for f in BaseCategoryService.enumerate_hom(a, b):
            for g in BaseCategoryService.enumerate_hom(b, a):
                assert functor.on_morphism(compose(g, f)) == compose(functor.on_morphism(g), functor.on_morphism(f))


def test_iterated_functor_matches_iterated_adjunction():
    adjunction = AdjunctionService.builtin_adjunction(BITS, BaseCategory())
    x = BaseObject(('e', 'f'))
    twice = AdjunctionService.iterate_adjunction(adjunction, 2)
    assert adjunction.left.iterate_object(x, 2) == twice.left.on_object(x)
    swap = BaseMorphism(x, x, ('f', 'e'))
    assert adjunction.left.iterate_morphism(swap, 2) == twice.left.on_morphism(swap)
    assert AdjunctionService.adj_unit(twice, x) == twice.unit(x)
    assert AdjunctionService.adj_counit(adjunction, x)('([e,f],1)') == 'f'


def test_functor_memo_is_bounded():
    adjunction = AdjunctionService.builtin_adjunction(BITS, BaseCategory())
    bound = current_config().MEMO_SIZE
    for k in range(bound + 10):
        adjunction.left.on_object(BaseObject((f'v{k}',)))
    assert len(adjunction.left._objects) == bound
    # evicted images are rebuilt unchanged
    assert adjunction.left.on_object(BaseObject(('v0',))).elements == ('(v0,0)', '(v0,1)')


def test_composite_matches_the_product_alphabet_by_currying():
    """(-)xI1 then (-)xI2 against the single adjunction at I1xI2, through ((x,i),j) <-> (x,(i,j))."""
    compose = BaseCategoryService.compose
    first, second = ['a', 'b'], ['0', '1']
    composite = AdjunctionService.builtin_adjunction({'kind': 'composite', 'parts': [
        {'kind': 'product-exponential', 'input': first},
        {'kind': 'product-exponential', 'input': second}
    ]}, BaseCategory())
    pairs = BaseObject(tuple(encode_tuple((i, j)) for i in first for j in second))
    single = AdjunctionService.product_exponential(BaseCategory(), pairs)

    def curry(x):
        dom = composite.left.on_object(x)
        table = []
        for element in dom.elements:
            (state, i), j = decode_term(element)
            table.append(encode_tuple((state, encode_tuple((i, j)))))
        return BaseMorphism(dom, single.left.on_object(x), tuple(table))

    def flatten(y):
        dom = composite.right.on_object(y)
        table = tuple(
            encode_function(tuple(value for row in decode_term(element) for value in row))
            for element in dom.elements
        )
        return BaseMorphism(dom, single.right.on_object(y), table)

    objects = plain_objects((1, 2))
    for x in objects:
        BaseCategoryService.invert(curry(x))
        BaseCategoryService.invert(flatten(x))
    for x in objects:
        for y in objects:
            for f in BaseCategoryService.enumerate_hom(x, y):
                assert compose(curry(y), composite.left.on_morphism(f)) == compose(single.left.on_morphism(f), curry(x))
            for g in BaseCategoryService.enumerate_hom(single.left.on_object(x), y):
                assert compose(flatten(y), composite.transpose(compose(g, curry(x)), x)) == single.transpose(g, x)


def test_base_change_along_the_identity_is_the_identity():
    compose = BaseCategoryService.compose
    lower, upper = AdjunctionService.base_change(MonoidHom.identity(Z2))
    objects = z2_objects()

    def into_induced(x):
        return BaseMorphism(x, lower.left.on_object(x), tuple(encode_tuple((Z2.unit, v)) for v in x.elements))

    def into_coinduced(x):
        return BaseMorphism(
            x, upper.right.on_object(x),
            tuple(encode_function(tuple(x.act(n, v) for n in Z2.elements)) for v in x.elements)
        )

    swap = objects[-1]
    assert lower.left.on_object(swap).elements == ('(0,s0)', '(0,s1)')
    for x in objects:
        assert lower.right.on_object(x) == x
        BaseCategoryService.invert(into_induced(x))
        BaseCategoryService.invert(into_coinduced(x))
        for y in objects:
            for f in BaseCategoryService.enumerate_hom(x, y):
                assert compose(lower.left.on_morphism(f), into_induced(x)) == compose(into_induced(y), f)
                assert compose(upper.right.on_morphism(f), into_coinduced(x)) == compose(into_coinduced(y), f)
