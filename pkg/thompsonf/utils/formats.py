"""Text formats for the command line.

    pair list   "(3,7);(5,11)"               integer phi-pairs
    break list  "(1/4,1/2);(1/2,3/4)"        interior breaks of an element
"""
from typing import List, Tuple

import pyparsing as pp

from ..core.exceptions import FormatError
from ..models.dyadic import Dyadic, parse_dyadic

_LPAR, _RPAR, _COMMA = map(pp.Suppress, "(),")
_INTEGER = pp.Regex(r"[+-]?\d+").set_parse_action(lambda t: int(t[0]))
_NUMBER = pp.Regex(r"[+-]?\d+(\s*/\s*\d+)?").set_parse_action(lambda t: parse_dyadic(t[0]))

PAIR_LIST = pp.DelimitedList(pp.Group(_LPAR + _INTEGER + _COMMA + _INTEGER + _RPAR), delim=";")
BREAK_LIST = pp.Optional(pp.DelimitedList(pp.Group(_LPAR + _NUMBER + _COMMA + _NUMBER + _RPAR), delim=";"))


def _parse(grammar: pp.ParserElement, text: str, what: str):
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise FormatError(f"'{text}' is not a {what}: {exc.msg} (at position {exc.loc})") from exc


def parse_pair_list(text: str) -> List[Tuple[int, int]]:
    """
    Parse "(3,7);(5,11)" into [(3, 7), (5, 11)].

    Raises:
        FormatError: If the text is not a ';'-separated list of integer pairs.
    """
    return [(x, y) for x, y in _parse(PAIR_LIST, text, "pair list")]


def parse_break_list(text: str) -> List[Tuple[Dyadic, Dyadic]]:
    """
    Parse "(1/4,1/2);(1/2,3/4)" into dyadic points; the empty string is the identity.

    Raises:
        FormatError: If the text is malformed.
        NotDyadicError: If a coordinate is not dyadic.
    """
    return [(x, y) for x, y in _parse(BREAK_LIST, text, "break list")]
