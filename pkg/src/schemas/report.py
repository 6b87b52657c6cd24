"""
Schemas para reportes de verificación.
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ClaimKind(str, Enum):
    """Propiedad verificada."""

    GCP = "GCP"
    ZCP = "ZCP"
    ZCCS = "ZCCS"
    IGC = "IGC"
    ZCAC = "ZCAC"
    ZCACS = "ZCACS"
    BOUND = "BOUND"


class Violation(BaseModel):
    """Un desplazamiento donde la correlación exigida no se cumple."""

    model_config = ConfigDict(frozen=True)

    ids: List[int] = Field(..., description="Índices del par (código/arreglo o conjunto)")
    shift: List[int] = Field(..., description="τ o (τ1, τ2)")
    counts: List[int] = Field(..., description="Conteo exacto de raíces ω^e")
    magnitude: float = Field(..., description="|valor| en punto flotante (solo diagnóstico)")
    expected: int = Field(0, description="Valor exigido en el desplazamiento")

    def sort_key(self) -> tuple:
        return (tuple(self.ids), tuple(self.shift))


class VerificationReport(BaseModel):
    """Resultado de un verificador exhaustivo."""

    claim: ClaimKind
    params: Dict[str, int] = Field(default_factory=dict, description="Tamaños (K,M,L,Z / L1,L2,Z1,Z2)")
    passed: bool
    peak: Optional[float] = Field(None, description="Valor observado en el desplazamiento cero")
    violations: List[Violation] = Field(default_factory=list)
    violation_count: int = Field(0, ge=0, description="Total de violaciones (la lista puede estar recortada)")
    max_residual: float = Field(0.0, ge=0, description="Mayor |valor| flotante entre los ceros exactos")
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _passed_matches_violations(self):
        if self.passed != (self.violation_count == 0):
            raise ValueError("passed must be true exactly when there are no violations")
        if len(self.violations) > self.violation_count:
            raise ValueError("more violations listed than counted")
        return self

    def summary(self) -> str:
        sizes = ", ".join(f"{k}={v}" for k, v in self.params.items())
        verdict = "OK" if self.passed else f"FALLA ({self.violation_count} violaciones)"
        return f"{self.claim.value}({sizes}): {verdict}, pico={self.peak}"
