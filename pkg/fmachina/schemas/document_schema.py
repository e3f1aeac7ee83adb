"""
Machine document schemas for input validation and canonical serialization.
"""
from marshmallow import RAISE, Schema, ValidationError, fields, validate, validates_schema

from fmachina.models.machine import FLAVORS
from fmachina.utils.validators import IDENTIFIER_PATTERN, validate_element

ADJUNCTION_KINDS = (
    'identity',
    'product-exponential',
    'composite',
    'base-change-comonadic',
    'base-change-monadic'
)


def element_identifier(value):
    if not validate_element(value):
        raise ValidationError(f'{value!r} is not a valid element identifier')


def action_table():
    return fields.Dict(keys=fields.Str(), values=fields.Dict(keys=fields.Str(), values=fields.Str()))


class MonoidSchema(Schema):
    """Schema for a finite monoid given by its multiplication table."""

    class Meta:
        unknown = RAISE

    elements = fields.List(fields.Str(validate=validate.Regexp(IDENTIFIER_PATTERN)), required=True)
    unit = fields.Str(required=True)
    mult = fields.Dict(
        keys=fields.Str(),
        values=fields.Dict(keys=fields.Str(), values=fields.Str()),
        required=True
    )


class MonoidHomSchema(Schema):

    class Meta:
        unknown = RAISE

    dom = fields.Nested(MonoidSchema, required=True)
    cod = fields.Nested(MonoidSchema, required=True)
    table = fields.Dict(keys=fields.Str(), values=fields.Str(), required=True)


class AdjunctionSpecSchema(Schema):
    """Schema for builtin adjunction specs; composites nest further specs."""

    class Meta:
        unknown = RAISE

    kind = fields.Str(
        required=True,
        validate=validate.OneOf(
            ADJUNCTION_KINDS,
            error='Adjunction kind must be one of: ' + ', '.join(ADJUNCTION_KINDS)
        )
    )
    input = fields.List(fields.Str(validate=validate.Regexp(IDENTIFIER_PATTERN)))
    parts = fields.List(fields.Nested(lambda: AdjunctionSpecSchema()), validate=validate.Length(min=1))
    hom = fields.Nested(MonoidHomSchema)

    @validates_schema
    def validate_kind_fields(self, data, **kwargs):
        required = {
            'identity': set(),
            'product-exponential': {'input'},
            'composite': {'parts'},
            'base-change-comonadic': {'hom'},
            'base-change-monadic': {'hom'}
        }[data['kind']]
        errors = {}
        for name in ('input', 'parts', 'hom'):
            if name in required and name not in data:
                errors[name] = [f'Required for {data["kind"]} adjunctions.']
            if name not in required and name in data:
                errors[name] = [f'Not allowed for {data["kind"]} adjunctions.']
        if errors:
            raise ValidationError(errors)


class BaseSchema(Schema):

    class Meta:
        unknown = RAISE

    kind = fields.Str(required=True, validate=validate.OneOf(('finset', 'mset')))
    monoid = fields.Nested(MonoidSchema)

    @validates_schema
    def validate_monoid(self, data, **kwargs):
        if data['kind'] == 'mset' and 'monoid' not in data:
            raise ValidationError('M-set bases need a monoid.', 'monoid')
        if data['kind'] == 'finset' and 'monoid' in data:
            raise ValidationError('Finite-set bases carry no monoid.', 'monoid')


class MachineTablesSchema(Schema):
    """Schema for the machine part: states, structure tables and an optional action."""

    class Meta:
        unknown = RAISE

    flavor = fields.Str(
        required=True,
        validate=validate.OneOf(FLAVORS, error='Flavor must be one of: mealy, moore')
    )
    states = fields.List(fields.Str(validate=element_identifier), required=True)
    d = fields.Dict(keys=fields.Str(), values=fields.Str(), required=True)
    s = fields.Dict(keys=fields.Str(), values=fields.Str(), required=True)
    action = action_table()


class MachineDocumentSchema(Schema):
    """Schema for a complete machine document."""

    class Meta:
        unknown = RAISE

    base = fields.Nested(BaseSchema, required=True)
    adjunction = fields.Nested(AdjunctionSpecSchema, required=True)
    output = fields.List(fields.Str(validate=element_identifier), required=True)
    output_action = action_table()
    machine = fields.Nested(MachineTablesSchema, required=True)

    @validates_schema
    def validate_actions(self, data, **kwargs):
        if data['base']['kind'] == 'finset':
            if 'output_action' in data:
                raise ValidationError('Actions need an M-set base.', 'output_action')
            if 'action' in data['machine']:
                raise ValidationError({'action': ['Actions need an M-set base.']}, 'machine')


class MorphismFileSchema(Schema):
    """Schema for a state-mapping table, optionally naming its target document."""

    class Meta:
        unknown = RAISE

    table = fields.Dict(keys=fields.Str(), values=fields.Str(), required=True)
    target = fields.Str()


# Schema instances
document_schema = MachineDocumentSchema()
morphism_file_schema = MorphismFileSchema()
