from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class LatticeSubgroup(BaseModel):
    """
    Finite-index subgroup of Z^2 in canonical triangular form.

    The subgroup is {k(g, h) + j(0, m)}: g is the least positive first
    coordinate of a member, m the least positive n with (0, n) a member,
    and h is reduced modulo m.

    Attributes:
        g (int): Positive.
        h (int): 0 <= h < m.
        m (int): Positive.
    """
    model_config = ConfigDict(frozen=True)

    g: int = Field(..., gt=0)
    h: int = Field(..., ge=0)
    m: int = Field(..., gt=0)

    @model_validator(mode="after")
    def check_reduced(self):
        if self.h >= self.m:
            raise ValueError(f"h must be reduced modulo m, got h={self.h}, m={self.m}")
        return self

    @property
    def triple(self) -> Tuple[int, int, int]:
        return self.g, self.h, self.m

    def __lt__(self, other: "LatticeSubgroup") -> bool:
        return self.triple < other.triple

    def __str__(self):
        return f"g={self.g} h={self.h} m={self.m}"


class RectPair(BaseModel):
    """K(a,b) as its parameters; its lattice is <(a, 0), (0, b)>."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., gt=0)
    b: int = Field(..., gt=0)

    def swap(self) -> "RectPair":
        return RectPair(a=self.b, b=self.a)

    @property
    def pair(self) -> Tuple[int, int]:
        return self.a, self.b

    def __str__(self):
        return f"({self.a}, {self.b})"
