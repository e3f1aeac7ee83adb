"""
Command sets and the report helpers they share.
"""
import click

from fmachina.services.document_service import DocumentService
from fmachina.utils.encoding import canonical_json


class CommandSet:
    """A named group of commands that create_app registers on the command group."""

    def __init__(self, name):
        self.name = name
        self.commands = []

    def command(self, *args, **kwargs):
        def decorator(function):
            command = click.command(*args, **kwargs)(function)
            self.commands.append(command)
            return command
        return decorator


def emit(message, data, ok=True):
    """
    Print a deterministic JSON report; exit with code 1 when the property fails.

    Args:
        message (str): One-line summary
        data (dict): Report body
        ok (bool): Whether the checked property holds
    """
    click.echo(canonical_json({
        'status': 'success' if ok else 'failure',
        'message': message,
        'data': data
    }), nl=False)
    if not ok:
        click.get_current_context().exit(1)


def write_document(path, machine):
    """Write a machine document when an output path was given."""
    if path:
        DocumentService.write(path, machine)


def machine_file():
    return click.Path(exists=True, dir_okay=False)


__all__ = ['CommandSet', 'emit', 'machine_file', 'write_document']
