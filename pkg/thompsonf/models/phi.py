from typing import NamedTuple


class PhiImage(NamedTuple):
    """
    (log2 f'(0), log2 f'(1)) for an element f of F.

    Adds componentwise, so phi(fg) == phi(f) + phi(g).
    """
    e0: int
    e1: int

    def __add__(self, other: "PhiImage") -> "PhiImage":
        return PhiImage(self.e0 + other[0], self.e1 + other[1])

    def __neg__(self) -> "PhiImage":
        return PhiImage(-self.e0, -self.e1)

    def swap(self) -> "PhiImage":
        return PhiImage(self.e1, self.e0)

    def __str__(self):
        return f"({self.e0}, {self.e1})"
