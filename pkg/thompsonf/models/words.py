from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union


@dataclass(frozen=True)
class GeneratorRef:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Product:
    factors: Tuple["WordExpr", ...]

    def __str__(self):
        return " ".join(_wrap(f) if isinstance(f, Product) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Power:
    base: "WordExpr"
    exponent: int

    def __str__(self):
        return f"{_wrap(self.base)}^{self.exponent}"


@dataclass(frozen=True)
class Conjugate:
    """base^by = by⁻¹ · base · by."""
    base: "WordExpr"
    by: "WordExpr"

    def __str__(self):
        return f"{_wrap(self.base)}^{_wrap(self.by)}"


@dataclass(frozen=True)
class Commutator:
    """[left, right] = left · right · left⁻¹ · right⁻¹."""
    left: "WordExpr"
    right: "WordExpr"

    def __str__(self):
        return f"[{self.left}, {self.right}]"


WordExpr = Union[GeneratorRef, Product, Power, Conjugate, Commutator]


def _wrap(node: WordExpr) -> str:
    if isinstance(node, (GeneratorRef, Commutator)):
        return str(node)
    return f"({node})"
