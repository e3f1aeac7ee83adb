"""
Centralized error handling for the command line.
"""
import click
from colorama import Fore, Style
from marshmallow import ValidationError

from fmachina.utils.encoding import canonical_json
from fmachina.utils.errors import InputError, InternalInvariantError, SizeGuardExceeded


def _report(payload, exit_code, color):
    click.echo(canonical_json({'status': 'error', **payload}), nl=False)
    click.echo(f'{color}{payload["message"]}: {payload.get("error", "")}{Style.RESET_ALL}', err=True)
    return exit_code


def register_error_handlers(cli):
    """
    Register error handlers with the command group.

    Args:
        cli: ToolkitGroup instance
    """

    @cli.errorhandler(InputError)
    def handle_input_error(error):
        """Handle malformed or inconsistent input."""
        return _report(error.to_dict(), error.exit_code, Fore.YELLOW)

    @cli.errorhandler(SizeGuardExceeded)
    def handle_size_guard(error):
        """Handle objects and enumerations over their bound."""
        return _report(error.to_dict(), error.exit_code, Fore.MAGENTA)

    @cli.errorhandler(InternalInvariantError)
    def handle_internal_error(error):
        return _report(error.to_dict(), error.exit_code, Fore.RED)

    @cli.errorhandler(ValidationError)
    def handle_validation_error(error):
        """Handle Marshmallow validation errors."""
        return _report({
            'message': 'Validation failed',
            'error': 'Input did not match its schema',
            'errors': error.messages
        }, 2, Fore.YELLOW)
