from .formats import parse_break_list, parse_pair_list
from .output import emit, render

__all__ = [
    "parse_break_list",
    "parse_pair_list",
    "emit",
    "render",
]
