"""
Utils package initialization.
"""
from fmachina.utils import encoding, error_handlers, errors, validators

__all__ = ['encoding', 'error_handlers', 'errors', 'validators']
