"""
Exception hierarchy shared by every service and command.

Each family carries the process exit code the command line reports for it.
"""


class FMachinaError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 2
    message = 'Toolkit error'

    def __init__(self, detail, **context):
        super().__init__(detail)
        self.detail = detail
        self.context = context

    def to_dict(self):
        """
        Convert the error to a report fragment.

        Returns:
            dict: message, detail and any context values
        """
        data = {'message': self.message, 'error': str(self.detail)}
        if self.context:
            data['context'] = self.context
        return data


class InputError(FMachinaError):
    """Malformed or inconsistent input; exit code 2."""

    exit_code = 2
    message = 'Invalid input'


class InvariantViolation(InputError):
    message = 'Invariant violated'


class CompositionError(InputError):
    message = 'Morphisms are not composable'


class DiagramError(InputError):
    message = 'Malformed diagram'


class DocumentSyntaxError(InputError):
    message = 'Document is not well-formed JSON'

    def __init__(self, detail, line, column):
        super().__init__(detail, line=line, column=column)
        self.line = line
        self.column = column


class DocumentSemanticError(InputError):
    message = 'Document failed validation'

    def __init__(self, detail, errors=None):
        super().__init__(detail)
        self.errors = errors or {}

    def to_dict(self):
        data = super().to_dict()
        if self.errors:
            data['errors'] = self.errors
        return data


class IncompatibleMachinesError(InputError):
    message = 'Machines are not compatible'


class StrictnessError(InputError):
    message = 'Carriers do not agree on the nose'


class UnknownAdjunctionError(InputError):
    message = 'Unknown adjunction spec'


class WordDomainError(InputError):
    message = 'Word outside the domain of the run semantics'


class InvalidMorphismError(InputError):
    message = 'Not a machine morphism'


class SizeGuardExceeded(FMachinaError):
    """A materialized object or enumeration would exceed its bound; exit code 3."""

    exit_code = 3
    message = 'Size guard exceeded'

    def __init__(self, detail, size, bound, **context):
        super().__init__(detail, size=size, bound=bound, **context)
        self.size = size
        self.bound = bound


class EnumerationTooLarge(SizeGuardExceeded):
    message = 'Enumeration too large'


class OracleBoundExceeded(SizeGuardExceeded):
    message = 'Carrier exceeds the oracle bound'


class InternalInvariantError(FMachinaError):
    """A construction left the object it must land in; signals a bug."""

    exit_code = 1
    message = 'Internal invariant failed'
