from .element import element
from .kab import kab
from .subgroup import subgroup

__all__ = ["element", "kab", "subgroup"]
