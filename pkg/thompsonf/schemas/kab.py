from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from .element import ElementOut

CheckGroup = Literal["membership", "support_commutation", "commutator_identities", "above_diagonal"]


class CertificateCheck(BaseModel):
    """
    Outcome of one exactly-checked premise of the K(a,b) generator certificate.

    Attributes:
        group (CheckGroup): Which family of premises the check belongs to.
        name (str): Human-readable statement that was checked.
        passed (bool): Whether the statement holds.
        detail (Optional[str]): Observed value when the check fails.
    """
    group: CheckGroup
    name: str
    passed: bool
    detail: Optional[str] = None

    def __str__(self):
        if self.passed:
            return f"[pass] {self.group}: {self.name}"
        return f"[FAIL] {self.group}: {self.name} ({self.detail})"


class CertificateReport(BaseModel):
    """
    Certificate that <y0, y1> = K(a,b) and is isomorphic to F.

    Attributes:
        a (int): First rectangle parameter.
        b (int): Second rectangle parameter.
        checks (List[CertificateCheck]): Every premise, in a fixed order.
        certified (bool): True iff every check passed.
    """
    a: int = Field(..., ge=1)
    b: int = Field(..., ge=1)
    checks: List[CertificateCheck]
    certified: bool

    @property
    def failed(self) -> List[CertificateCheck]:
        return [c for c in self.checks if not c.passed]

    def failed_groups(self) -> List[str]:
        return sorted({c.group for c in self.failed})


class KabOut(BaseModel):
    """
    Command-line report for `kab A B`.

    Attributes:
        y0 (ElementOut): First generator.
        y1 (ElementOut): Second generator.
        commutator (ElementOut): [y0, y1].
        commutator_by_y0 (ElementOut): [y0, y1]^y0, expected to equal g0.
        commutator_by_y0_y1_inverse (ElementOut): [y0, y1]^(y0 y1^-1), expected to equal g1.
        certificate (CertificateReport): Exact check results.
    """
    y0: ElementOut
    y1: ElementOut
    commutator: ElementOut
    commutator_by_y0: ElementOut
    commutator_by_y0_y1_inverse: ElementOut
    certificate: CertificateReport
