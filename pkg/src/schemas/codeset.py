"""
Schema del documento JSON de un conjunto de códigos o arreglos.

Las fases se guardan como enteros de Z_λ, nunca como complejos:

* gcp:   phases[sequence][col]            (2 secuencias)
* igc:   phases[code][row][col]
* zcac:  phases[array][row][col]
* zcacs: phases[set][array][row][col]
"""
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.utils.constants import KIND_GCP, KIND_IGC, KIND_ZCAC, KIND_ZCACS

PHASE_DEPTH = {KIND_GCP: 2, KIND_IGC: 3, KIND_ZCAC: 3, KIND_ZCACS: 4}


def _depth(value: Any) -> int:
    depth = 0
    while isinstance(value, list):
        depth += 1
        if not value:
            break
        value = value[0]
    return depth


class CodesetDocument(BaseModel):
    """Documento serializable de un conjunto generado."""

    model_config = ConfigDict(populate_by_name=True)

    kind: Literal["gcp", "igc", "zcac", "zcacs"]
    lam: int = Field(..., alias="lambda", ge=2)
    profile: List[Tuple[int, int]] = Field(default_factory=list)
    boolean_m: Optional[int] = Field(None, ge=1)
    labels: List[Dict[str, List[int]]] = Field(default_factory=list)
    phases: List[Any]

    @field_validator("phases")
    @classmethod
    def _integer_phases(cls, value: List[Any]) -> List[Any]:
        stack = [value]
        while stack:
            item = stack.pop()
            if isinstance(item, list):
                stack.extend(item)
            elif isinstance(item, bool) or not isinstance(item, int):
                raise ValueError(f"las fases deben ser enteros, se encontró {item!r}")
        return value

    def check_depth(self) -> None:
        expected = PHASE_DEPTH[self.kind]
        if _depth(self.phases) != expected:
            raise ValueError(f"'{self.kind}' necesita fases con {expected} niveles de anidamiento")
