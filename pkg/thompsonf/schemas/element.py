from typing import List, Tuple

from pydantic import BaseModel, Field, field_validator

from ..models.dyadic import parse_dyadic
from ..models.plmap import Orbital, PLMap

BreakText = Tuple[str, str]


class ElementOut(BaseModel):
    """
    Wire form of an element of F: the interior breaks as "p/q" strings.

    The endpoints (0, 0) and (1, 1) are implicit. The same model is used for
    reading element files, so break strings are validated on the way in.

    Attributes:
        breaks (List[Tuple[str, str]]): Interior breaks sorted by x.
    """
    breaks: List[BreakText] = Field(default_factory=list)

    @field_validator("breaks")
    @classmethod
    def validate_breaks(cls, v: List[BreakText]) -> List[BreakText]:
        for x, y in v:
            parse_dyadic(x)
            parse_dyadic(y)
        return v

    @classmethod
    def from_map(cls, f: PLMap) -> "ElementOut":
        return cls(breaks=[(str(x), str(y)) for x, y in f.interior_breaks])

    def points(self):
        return [(parse_dyadic(x), parse_dyadic(y)) for x, y in self.breaks]

    def __str__(self):
        if not self.breaks:
            return "identity"
        return "; ".join(f"({x}, {y})" for x, y in self.breaks)


class ValueOut(BaseModel):
    """Single exact number, e.g. the image of a point."""
    value: str


class PhiOut(BaseModel):
    """phi(f) = (log2 f'(0), log2 f'(1))."""
    phi: Tuple[int, int]


class OrbitalsOut(BaseModel):
    """Orbitals of a map as exact (lo, hi) pairs, left to right."""
    orbitals: List[BreakText]

    @classmethod
    def from_orbitals(cls, orbs: List[Orbital]) -> "OrbitalsOut":
        return cls(orbitals=[(str(o.lo), str(o.hi)) for o in orbs])
