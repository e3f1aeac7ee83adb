"""
Document service: parsing and canonical serialization of machine documents.
"""
import json
import logging
import os

from marshmallow import ValidationError

from fmachina.models.base import BaseCategory, BaseObject, FiniteMonoid
from fmachina.models.machine import MachineMorphism
from fmachina.schemas.document_schema import document_schema, morphism_file_schema
from fmachina.services.adjunction_service import AdjunctionService
from fmachina.services.machine_service import MachineService
from fmachina.utils.encoding import canonical_json
from fmachina.utils.errors import DocumentSemanticError, DocumentSyntaxError, InvariantViolation

log = logging.getLogger(__name__)


def _read_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise DocumentSyntaxError(error.msg, line=error.lineno, column=error.colno)


def _read_file(path):
    with open(path, encoding='utf-8') as handle:
        return handle.read()


def _make_object(category, elements, action):
    """Object on ``elements``; a missing unit row means the unit acts trivially."""
    monoid = category.monoid
    if monoid is None:
        return BaseObject(tuple(elements))
    action = action or {}
    unknown = [m for m in action if m not in monoid.index]
    if unknown:
        raise InvariantViolation(f'Action rows for unknown monoid elements: {", ".join(unknown)}')
    for m in monoid.elements:
        if m not in action and m != monoid.unit:
            raise InvariantViolation(f'Action table misses the row for {m}')
        row = action.get(m, {})
        missing = [x for x in elements if x not in row]
        if m in action and missing:
            raise InvariantViolation(f'Action of {m} misses {", ".join(missing)}')

    def act(m, x):
        if m not in action:
            return x
        return action[m][x]

    return BaseObject.build(elements, monoid, act)


class DocumentService:
    """Service class for machine documents and morphism files."""

    @staticmethod
    def parse(text):
        """
        Parse and validate a machine document.

        Args:
            text (str): Document text

        Returns:
            FMachine: The machine it describes
        """
        data = _read_json(text)
        try:
            loaded = document_schema.load(data)
        except ValidationError as error:
            raise DocumentSemanticError('Document does not match the machine schema', errors=error.messages)
        return DocumentService.from_document(loaded)

    @staticmethod
    def from_document(data):
        """
        Build the machine of an already validated document.

        Args:
            data (dict): Document loaded by the schema

        Returns:
            FMachine: The machine it describes
        """
        base = data['base']
        category = BaseCategory(FiniteMonoid.from_dict(base['monoid']) if base['kind'] == 'mset' else None)
        adjunction = AdjunctionService.builtin_adjunction(data['adjunction'], category)
        tables = data['machine']
        output = _make_object(category, data['output'], data.get('output_action'))
        carrier = _make_object(category, tables['states'], tables.get('action'))
        return MachineService.make_machine(tables['flavor'], adjunction, carrier, output, tables['d'], tables['s'])

    @staticmethod
    def load(path):
        log.debug('Loading machine document %s', path)
        return DocumentService.parse(_read_file(path))

    @staticmethod
    def to_document(m):
        """
        Canonical document of a machine.

        Args:
            m (FMachine): Machine

        Returns:
            dict: Document with every table spelled out, dumped through the document schema
        """
        document = {
            'base': m.adjunction.base.to_dict(),
            'adjunction': m.adjunction.spec,
            'output': list(m.output.elements),
            'machine': {
                'flavor': m.flavor,
                'states': list(m.states),
                'd': m.d.as_dict(),
                's': m.s.as_dict()
            }
        }
        if m.adjunction.base.monoid is not None:
            document['output_action'] = m.output.to_dict()['action']
            document['machine']['action'] = m.carrier.to_dict()['action']
        return document_schema.dump(document)

    @staticmethod
    def serialize(m):
        """
        Canonical document text of a machine.

        The dumped document must pass the same schema that parse loads with.

        Args:
            m (FMachine): Machine

        Returns:
            str: Document text with sorted keys
        """
        document = DocumentService.to_document(m)
        errors = document_schema.validate(document)
        if errors:
            raise DocumentSemanticError('Machine cannot be written as a valid document', errors=errors)
        return canonical_json(document)

    @staticmethod
    def write(path, m):
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(DocumentService.serialize(m))

    @staticmethod
    def load_morphism(path, src, dst=None):
        """
        Load a state-mapping table as a carrier map between two machines.

        The target machine is ``dst`` when given, otherwise the document named by
        the file's ``target`` entry (relative to the file), otherwise ``src``.

        Args:
            path (str): Morphism file
            src (FMachine): Source machine
            dst (FMachine): Target machine

        Returns:
            MachineMorphism: Carrier map, not yet checked against the structure maps
        """
        loaded = morphism_file_schema.load(_read_json(_read_file(path)))
        if dst is None:
            if 'target' in loaded:
                dst = DocumentService.load(os.path.join(os.path.dirname(path), loaded['target']))
            else:
                dst = src
        f = MachineService.tabulate('Morphism', src.carrier, dst.carrier, loaded['table'])
        return MachineMorphism(src, dst, f)
