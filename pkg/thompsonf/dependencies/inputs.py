from typing import Dict, List, Optional, Tuple, Union

import click

from ..crud.elements import load_element, load_environment
from ..models.plmap import PLMap
from ..services import plmap as pl
from ..services.thompson import standard_environment
from ..utils.formats import parse_break_list, parse_pair_list

SubgroupInput = Union[List[Tuple[int, int]], List[PLMap]]


class ElementRef(click.ParamType):
    """
    An element given as a break list "(1/4,1/2);(1/2,3/4)" or as "@path" to an element file.

    Invalid input raises the library's own errors so the command exits with
    their exit codes.
    """
    name = "element"

    def convert(self, value, param, ctx) -> PLMap:
        if isinstance(value, PLMap):
            return value
        text = value.strip()
        if text.startswith("@"):
            return load_element(text[1:])
        if text == "identity":
            return pl.identity()
        return pl.from_breaks(parse_break_list(text))


class SubgroupSpec(click.ParamType):
    """
    Generators of <F', ...>: a phi-pair list "(10,0);(0,15);(2,6)" or
    "@a.json,b.json", a comma-separated list of element files.
    """
    name = "subgroup"

    def convert(self, value, param, ctx) -> SubgroupInput:
        if not isinstance(value, str):
            return value
        text = value.strip()
        if text.startswith("@"):
            return [load_element(path.strip()) for path in text[1:].split(",") if path.strip()]
        return parse_pair_list(text)


ELEMENT = ElementRef()
SUBGROUP = SubgroupSpec()


def resolve_environment(env_path: Optional[str]) -> Dict[str, PLMap]:
    """
    Name table for word evaluation: the standard generators, overridden and
    extended by the named elements of `env_path` when given.
    """
    env = standard_environment()
    if env_path:
        env.update(load_environment(env_path))
    return env
