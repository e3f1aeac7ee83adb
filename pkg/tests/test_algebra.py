"""
Test cases for the algebra/slice decomposition and the behavior adjunction on Moore machines.
"""
import itertools

import pytest

from fmachina.models.algebra import AlgebraMorphism, SliceMorphism
from fmachina.models.base import BaseMorphism
from fmachina.models.machine import MachineMorphism
from fmachina.services.algebra_service import AlgebraService
from fmachina.services.base_service import BaseCategoryService
from fmachina.services.machine_service import MachineService
from fmachina.utils.errors import (
    IncompatibleMachinesError,
    InvalidMorphismError,
    OracleBoundExceeded,
    StrictnessError
)

from tests.conftest import random_classical


def test_decompose_then_recompose(fix1, fix2):
    for m in (fix1, fix2):
        algebra, leg = AlgebraService.decompose(m)
        assert algebra.structure == m.d
        assert leg.output == m.output
        rebuilt = AlgebraService.recompose(algebra, leg)
        assert (rebuilt.d, rebuilt.s, rebuilt.flavor) == (m.d, m.s, m.flavor)


def test_recompose_is_strict(fix1, fix3):
    algebra, _ = AlgebraService.decompose(fix1)
    _, leg = AlgebraService.decompose(fix3)
    with pytest.raises(StrictnessError) as error:
        AlgebraService.recompose(algebra, leg)
    assert error.value.exit_code == 2


def test_morphism_iff_algebra_and_slice(fix1, fix3, fix3_min):
    """Every carrier map, checked both ways."""
    machines = [fix1, fix3, fix3_min]
    for src, dst in itertools.product(machines, repeat=2):
        src_algebra, src_leg = AlgebraService.decompose(src)
        dst_algebra, dst_leg = AlgebraService.decompose(dst)
        for f in BaseCategoryService.enumerate_hom(src.carrier, dst.carrier):
            split = (
                AlgebraService.algebra_morphism_valid(f, src_algebra, dst_algebra)
                and AlgebraService.slice_morphism_valid(f, src_leg, dst_leg)
            )
            assert MachineService.is_morphism(MachineMorphism(src, dst, f)) == split


def test_split_and_join(fix1):
    identity = MachineService.identity_morphism(fix1)
    algebra_morphism, slice_morphism = AlgebraService.split_morphism(identity)
    assert AlgebraService.join_morphism(algebra_morphism, slice_morphism).f == identity.f


def test_join_rejects_bad_pairs(fix1):
    algebra, leg = AlgebraService.decompose(fix1)
    swap = BaseMorphism(fix1.carrier, fix1.carrier, ('p1', 'p0'))
    identity = BaseMorphism.identity(fix1.carrier)
    # swapping parity commutes with d but not with the output leg
    assert AlgebraService.algebra_morphism_valid(swap, algebra, algebra)
    with pytest.raises(InvalidMorphismError):
        AlgebraService.join_morphism(AlgebraMorphism(algebra, algebra, swap), SliceMorphism(leg, leg, swap))
    with pytest.raises(StrictnessError):
        AlgebraService.join_morphism(AlgebraMorphism(algebra, algebra, swap), SliceMorphism(leg, leg, identity))


def test_behavior_functor_needs_moore(fix1, moore_parity):
    with pytest.raises(IncompatibleMachinesError):
        AlgebraService.functor_B(fix1)
    x = AlgebraService.functor_B(moore_parity)
    back = AlgebraService.functor_L(x)
    assert (back.d, back.s) == (moore_parity.d, moore_parity.s)
    assert AlgebraService.functor_B_morphism(MachineService.identity_morphism(moore_parity)).f.table == ('p0', 'p1')


def test_homset_bijection_on_fixtures(fix2, moore_parity):
    x = AlgebraService.functor_B(moore_parity)
    report = AlgebraService.homset_bijection_check(
        x, moore_parity, naturality=[MachineService.identity_morphism(moore_parity)]
    )
    assert report.ok
    assert report.to_dict()['sizes'] == [1, 1]
    assert report.naturality[0]['ok']

    for source, target in ((fix2, moore_parity), (moore_parity, fix2)):
        report = AlgebraService.homset_bijection_check(AlgebraService.functor_B(source), target)
        assert report.ok
        assert report.to_dict()['sizes'] == [0, 0]


@pytest.mark.parametrize('seed', range(8))
def test_homset_bijection_on_random_moore_machines(seed):
    source = random_classical(500 + seed, flavor='moore', states=1 + seed % 2)
    target = random_classical(600 + seed, flavor='moore', states=2)
    report = AlgebraService.homset_bijection_check(
        AlgebraService.functor_B(source), target, naturality=[MachineService.identity_morphism(target)]
    )
    assert report.ok
    assert len(report.left) == len(report.right)


def test_homset_bijection_bound(moore_parity):
    with pytest.raises(OracleBoundExceeded):
        AlgebraService.homset_bijection_check(AlgebraService.functor_B(moore_parity), moore_parity, bound=1)
