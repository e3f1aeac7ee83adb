"""
Custom validators for tables and identifiers.
"""
import re

from fmachina.utils.encoding import decode_term

IDENTIFIER_PATTERN = r'^[^\s()\[\],]+$'


def validate_identifier(value):
    """
    Validate an element identifier supplied by a document.

    Args:
        value (str): Identifier to validate

    Returns:
        bool: True if valid, False otherwise
    """
    return isinstance(value, str) and bool(re.match(IDENTIFIER_PATTERN, value))


def find_duplicates(values):
    """
    Find repeated entries of a sequence.

    Args:
        values: Sequence of hashable values

    Returns:
        list: Repeated values in first-repeat order
    """
    seen = set()
    repeated = []
    for value in values:
        if value in seen and value not in repeated:
            repeated.append(value)
        seen.add(value)
    return repeated


def missing_keys(table, domain):
    """
    List the domain entries a table leaves undefined.

    Args:
        table (Mapping): Table to check
        domain: Expected keys in order

    Returns:
        list: Missing keys in domain order
    """
    return [key for key in domain if key not in table]


def monoid_law_violations(elements, unit, multiply):
    """
    Check the unit laws and associativity of a multiplication table.

    Args:
        elements: Monoid elements
        unit: Claimed unit
        multiply (callable): Binary multiplication

    Returns:
        list: Human-readable violations (empty when the laws hold)
    """
    violations = []
    for a in elements:
        if multiply(unit, a) != a or multiply(a, unit) != a:
            violations.append(f'unit law fails at {a}')
    for a in elements:
        for b in elements:
            for c in elements:
                if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
                    violations.append(f'associativity fails at ({a},{b},{c})')
    return violations


def action_law_violations(monoid, elements, act):
    """
    Check the unit and associativity laws of a monoid action.

    Args:
        monoid (FiniteMonoid): Acting monoid
        elements: Elements of the acted-on set
        act (callable): act(m, x) -> element

    Returns:
        list: Human-readable violations (empty when the laws hold)
    """
    violations = []
    for x in elements:
        if act(monoid.unit, x) != x:
            violations.append(f'unit acts non-trivially on {x}')
    for m in monoid.elements:
        for n in monoid.elements:
            for x in elements:
                if act(m, act(n, x)) != act(monoid.multiply(m, n), x):
                    violations.append(f'action not associative at ({m},{n},{x})')
    return violations


def validate_element(value):
    """
    Validate a carrier element: a plain identifier or a canonical encoding.

    Constructed machines (products, coproducts) name their states by encodings
    such as ``(p0,p1)`` or ``inl(a)``; these read back unambiguously.

    Args:
        value (str): Element to validate

    Returns:
        bool: True if valid, False otherwise
    """
    if validate_identifier(value):
        return True
    if not isinstance(value, str) or re.search(r'\s', value):
        return False
    try:
        decode_term(value)
    except ValueError:
        return False
    return True
