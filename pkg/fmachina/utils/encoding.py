"""
Canonical string encodings for elements of constructed objects.

Tuples are written ``(x,y)``, function tables ``[y0,y1]`` (in the order of the
domain), coproduct tags ``inl(x)`` / ``inr(y)``. User-supplied identifiers never
contain the reserved characters, so encodings are unambiguous.
"""
import json
from typing import NamedTuple

from fmachina.config import current_config

RESERVED_CHARACTERS = '()[],'
COPRODUCT_TAGS = ('inl', 'inr')


class Tagged(NamedTuple):
    tag: str
    value: object


def encode_tuple(parts):
    return '(' + ','.join(parts) + ')'


def encode_function(values):
    return '[' + ','.join(values) + ']'


def encode_left(value):
    return f'inl({value})'


def encode_right(value):
    return f'inr({value})'


def decode_term(text):
    """
    Parse an encoded element back into nested Python values.

    Tuples become ``tuple``, function tables become ``list``, coproduct tags
    become ``Tagged`` and identifiers stay ``str``.

    Args:
        text (str): Encoded element

    Returns:
        str | tuple | list | Tagged: Decoded structure
    """
    value, position = _parse(text, 0)
    if position != len(text):
        raise ValueError(f'Trailing characters in encoded element {text!r}')
    return value


def _parse(text, position):
    if position < len(text) and text[position] in '([':
        opening = text[position]
        closing = ')' if opening == '(' else ']'
        items = []
        position += 1
        if position < len(text) and text[position] == closing:
            position += 1
        else:
            while True:
                item, position = _parse(text, position)
                items.append(item)
                if position >= len(text):
                    raise ValueError(f'Unterminated encoded element {text!r}')
                if text[position] == ',':
                    position += 1
                    continue
                if text[position] != closing:
                    raise ValueError(f'Unexpected {text[position]!r} in {text!r}')
                position += 1
                break
        return (tuple(items) if opening == '(' else items), position

    start = position
    while position < len(text) and text[position] not in RESERVED_CHARACTERS:
        position += 1
    if position == start:
        raise ValueError(f'Empty identifier in encoded element {text!r}')
    identifier = text[start:position]
    if identifier in COPRODUCT_TAGS and position < len(text) and text[position] == '(':
        inner, position = _parse(text, position + 1)
        if position >= len(text) or text[position] != ')':
            raise ValueError(f'Unterminated coproduct tag in {text!r}')
        return Tagged(identifier, inner), position + 1
    return identifier, position


def canonical_json(data):
    """Render JSON with sorted keys and fixed indentation."""
    return json.dumps(data, sort_keys=True, indent=current_config().JSON_INDENT, ensure_ascii=False) + '\n'
