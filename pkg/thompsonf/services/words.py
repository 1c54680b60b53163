"""Group-word grammar and word-order evaluation.

    expr   := term+
    term   := factor ['^' (signed-integer | factor)]
    factor := name | '(' expr ')' | '[' expr ',' expr ']'

An integer exponent is a power, a factor exponent is a conjugation
(`x1^x0` is x0⁻¹ x1 x0). Juxtaposition is the word-order product.
"""
import logging
from typing import Mapping

import pyparsing as pp

from ..core.exceptions import UnboundNameError, WordSyntaxError
from ..models.plmap import PLMap
from ..models.words import Commutator, Conjugate, GeneratorRef, Power, Product, WordExpr
from . import plmap as pl

logger = logging.getLogger(__name__)


def _make_term(tokens):
    if len(tokens) == 1:
        return tokens[0]
    base, exponent = tokens
    if isinstance(exponent, int):
        return Power(base, exponent)
    return Conjugate(base, exponent)


def _make_product(tokens):
    if len(tokens) == 1:
        return tokens[0]
    return Product(tuple(tokens))


def _build_grammar() -> pp.ParserElement:
    lpar, rpar, lbrack, rbrack, comma, caret = map(pp.Suppress, "()[],^")
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_").set_parse_action(lambda t: GeneratorRef(t[0]))
    integer = pp.Regex(r"[+-]?\d+").set_parse_action(lambda t: int(t[0]))

    expr = pp.Forward()
    commutator = (lbrack + expr + comma + expr + rbrack).set_parse_action(lambda t: Commutator(t[0], t[1]))
    factor = name | (lpar + expr + rpar) | commutator
    term = (factor + pp.Optional(caret + (integer | factor))).set_parse_action(_make_term)
    expr <<= pp.OneOrMore(term).set_parse_action(_make_product)
    return expr


WORD_GRAMMAR = _build_grammar()


def parse_word(text: str) -> WordExpr:
    """
    Parse a group word into its syntax tree.

    Args:
        text (str): Word such as "[x0 x1^-1, x1^x0]".

    Returns:
        WordExpr: Root node of the tree.

    Raises:
        WordSyntaxError: If the text does not match the grammar.
    """
    try:
        return WORD_GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise WordSyntaxError(f"cannot parse word '{text}': {exc.msg}", exc.loc) from exc


def eval_word(word: WordExpr, env: Mapping[str, PLMap]) -> PLMap:
    """
    Evaluate a word in word order against a read-only name table.

    Raises:
        UnboundNameError: If a generator name is missing from `env`.
    """
    match word:
        case GeneratorRef(name):
            if name not in env:
                raise UnboundNameError(name)
            return env[name]
        case Product(factors):
            return pl.product(*(eval_word(f, env) for f in factors))
        case Power(base, exponent):
            return pl.power(eval_word(base, env), exponent)
        case Conjugate(base, by):
            return pl.conjugate(eval_word(base, env), eval_word(by, env))
        case Commutator(left, right):
            return pl.commutator(eval_word(left, env), eval_word(right, env))
    raise TypeError(f"not a word expression: {word!r}")
