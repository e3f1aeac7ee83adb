"""
Pytest configuration and fixtures for testing.
"""
import os
import random

import pytest
from click.testing import CliRunner

from fmachina import create_app
from fmachina.config import current_config
from fmachina.models.base import BaseObject
from fmachina.services.document_service import DocumentService
from fmachina.services.machine_service import MachineService

BITS = BaseObject(('0', '1'))


def fixture_path(name):
    return os.path.join(current_config().FIXTURES_DIR, name)


def random_classical(seed, flavor='mealy', states=3, inputs=2, outputs=2):
    """A classical machine with tables drawn from ``random.Random(seed)``."""
    rng = random.Random(seed)
    carrier = [f'q{k}' for k in range(states)]
    letters = BaseObject(tuple(str(k) for k in range(inputs)))
    output = BaseObject(tuple(f'o{k}' for k in range(outputs)))
    d = {(e, i): rng.choice(carrier) for e in carrier for i in letters.elements}
    if flavor == 'mealy':
        s = {(e, i): rng.choice(output.elements) for e in carrier for i in letters.elements}
    else:
        s = {e: rng.choice(output.elements) for e in carrier}
    return MachineService.mk_classical(flavor, letters, output, carrier, d, s)


@pytest.fixture(scope='session')
def app():
    """Create the command group for testing."""
    app = create_app('testing')
    return app


@pytest.fixture(scope='session')
def runner(app):
    """Create a CLI runner."""
    return CliRunner()


@pytest.fixture
def invoke(app, runner):
    """Invoke a subcommand; fixture file names are resolved against fixtures/."""
    def call(*args):
        resolved = [
            fixture_path(arg) if arg.endswith('.json') and not os.path.isabs(arg) else arg
            for arg in args
        ]
        return runner.invoke(app, resolved)
    return call


@pytest.fixture(scope='session')
def fix1(app):
    """FIX1: parity Mealy machine, d(e,i) = s(e,i) = e xor i."""
    return MachineService.mk_classical(
        'mealy', BITS, BITS, ['p0', 'p1'],
        {(f'p{e}', str(i)): f'p{e ^ i}' for e in (0, 1) for i in (0, 1)},
        {(f'p{e}', str(i)): str(e ^ i) for e in (0, 1) for i in (0, 1)}
    )


@pytest.fixture(scope='session')
def fix2(app):
    """FIX2: constant Moore machine on one state."""
    return MachineService.mk_classical(
        'moore', BITS, BITS, ['e'],
        {('e', '0'): 'e', ('e', '1'): 'e'},
        {'e': '0'}
    )


@pytest.fixture(scope='session')
def fix3(app):
    """FIX3: two bisimilar states, d(x,i) = b and s(x,i) = 0."""
    return MachineService.mk_classical(
        'mealy', BITS, BITS, ['a', 'b'],
        {(x, i): 'b' for x in ('a', 'b') for i in ('0', '1')},
        {(x, i): '0' for x in ('a', 'b') for i in ('0', '1')}
    )


@pytest.fixture(scope='session')
def fix4(app):
    """FIX4: Mealy machine over Z/2-sets for base change along 1 -> Z/2."""
    return DocumentService.load(fixture_path('base_change.json'))


@pytest.fixture(scope='session')
def moore_parity(app):
    """Moore machine remembering the parity of its input."""
    return MachineService.mk_classical(
        'moore', BITS, BITS, ['p0', 'p1'],
        {(f'p{e}', str(i)): f'p{e ^ i}' for e in (0, 1) for i in (0, 1)},
        {'p0': '0', 'p1': '1'}
    )


@pytest.fixture(scope='session')
def fix3_min(app):
    return MachineService.mk_classical(
        'mealy', BITS, BITS, ['a'],
        {('a', '0'): 'a', ('a', '1'): 'a'},
        {('a', '0'): '0', ('a', '1'): '0'}
    )
