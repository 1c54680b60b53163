from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel, Field, model_validator

from ..models.lattice import LatticeSubgroup, RectPair


class Witness(str, Enum):
    """
    Which comparison of the rescaled lattices decided an isomorphism test.

    Values:
        - tau: the rescaled lattices are equal
        - tau_and_rev: equal once the coordinates of the second are swapped
        - none: neither comparison succeeded
    """
    tau = "equal-after-tau"
    tau_and_rev = "equal-after-tau-and-rev"
    none = "none"


class IsoVerdict(BaseModel):
    """
    Outcome of the isomorphism test for two finite-index subgroups of F.

    Attributes:
        isomorphic (bool): Whether the subgroups are isomorphic.
        witness (Witness): Which comparison succeeded, "none" when neither did.
        scaled_forms (tuple): The two tau-rescaled lattices that were compared.
    """
    isomorphic: bool
    witness: Witness
    scaled_forms: Tuple[LatticeSubgroup, LatticeSubgroup]

    @model_validator(mode="after")
    def witness_matches_verdict(self):
        if self.isomorphic == (self.witness is Witness.none):
            raise ValueError(f"witness '{self.witness.value}' contradicts isomorphic={self.isomorphic}")
        return self


class ExtensionSummary(BaseModel):
    """
    Data of the exact sequence Inner(H) -> H -> Z_residue.

    Attributes:
        inner (RectPair): Largest rectangular subgroup K(a,b) inside H.
        quotient_order (int): |H / Inner(H)|, the residue.
        quotient_generator (tuple): Generator of the image of phi(H) in Z_a x Z_b.
        index_in_F (int): [F : H].
        iso_to_F (bool): True iff the quotient is trivial.
    """
    inner: RectPair
    quotient_order: int = Field(..., gt=0)
    quotient_generator: Tuple[int, int]
    index_in_F: int = Field(..., gt=0)
    iso_to_F: bool

    @model_validator(mode="after")
    def iso_iff_trivial_quotient(self):
        if self.iso_to_F != (self.quotient_order == 1):
            raise ValueError("iso_to_F must hold exactly when the quotient is trivial")
        return self


class QuotientStructure(BaseModel):
    """Invariant factors of F / K(a,b) = Z_a x Z_b and the group order."""
    factors: Tuple[int, int]
    order: int = Field(..., gt=0)


class SubgroupAnalysis(BaseModel):
    """
    Report of `subgroup analyze`.

    Attributes:
        lattice (LatticeSubgroup): Canonical phi-image of H.
        index (int): [F : H].
        inner (RectPair): Inner(H).
        outer (RectPair): Outer(H).
        residue (int): Res(H).
        quotient_generator (tuple): Generator of H / Inner(H) inside Z_a x Z_b.
        iso_to_F (bool): Whether H is isomorphic to F.
    """
    lattice: LatticeSubgroup
    index: int
    inner: RectPair
    outer: RectPair
    residue: int
    quotient_generator: Tuple[int, int]
    iso_to_F: bool


class EnumerationOut(BaseModel):
    index: int
    count: int
    subgroups: List[LatticeSubgroup]


class ClassificationOut(BaseModel):
    """Isomorphism classes of the index-n subgroups, each sorted, in key order."""
    index: int
    class_count: int
    classes: List[List[LatticeSubgroup]]
