"""
Application factory for creating the fmachina command group.
"""
import logging
import sys

import click

from fmachina.config import activate


class ToolkitGroup(click.Group):
    """Command group that maps toolkit exceptions to reports and exit codes."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.error_handlers = {}

    def errorhandler(self, exc_type):
        """
        Register a handler for an exception type and its subclasses.

        The handler reports the error and returns the process exit code.
        """
        def decorator(handler):
            self.error_handlers[exc_type] = handler
            return handler
        return decorator

    def register_command_set(self, command_set):
        for command in command_set.commands:
            self.add_command(command)

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as error:
            for exc_type in type(error).__mro__:
                handler = self.error_handlers.get(exc_type)
                if handler is not None:
                    ctx.exit(handler(error))
            raise


def create_app(config_name='development'):
    """
    Application factory pattern for creating the command group.

    Args:
        config_name (str): Configuration name (development, production, testing)

    Returns:
        ToolkitGroup: Configured command group
    """
    settings = activate(config_name)

    # Reports own stdout
    logging.basicConfig(stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('fmachina').setLevel(settings.LOG_LEVEL)

    @click.group(cls=ToolkitGroup)
    def cli():
        """Finite F-Mealy and F-Moore machines over a chosen adjunction."""

    # Register command sets
    from fmachina.commands import algebra_commands, construction_commands, machine_commands
    cli.register_command_set(machine_commands.bp)
    cli.register_command_set(construction_commands.bp)
    cli.register_command_set(algebra_commands.bp)

    # Register error handlers
    from fmachina.utils import error_handlers
    error_handlers.register_error_handlers(cli)

    return cli
