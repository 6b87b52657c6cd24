"""
Schema para trabajos del CLI.
"""
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.utils.constants import FORMAT_CSV, FORMAT_JSON, LAMBDA_STRATEGIES


class Command(str, Enum):
    """Comandos disponibles."""

    GEN_GCP = "gen-gcp"
    GEN_IGC = "gen-igc"
    GEN_ZCAC = "gen-zcac"
    GEN_ZCACS = "gen-zcacs"
    VERIFY = "verify"
    EXPORT_GRID = "export-grid"

    @property
    def is_generator(self) -> bool:
        return self.value.startswith("gen-")

    @property
    def needs_profile(self) -> bool:
        return self in (Command.GEN_IGC, Command.GEN_ZCAC, Command.GEN_ZCACS)

    @property
    def needs_boolean_m(self) -> bool:
        return self in (Command.GEN_GCP, Command.GEN_ZCAC, Command.GEN_ZCACS)


class JobSpec(BaseModel):
    """Un trabajo completo: comando, parámetros de construcción y salidas."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    command: Command
    profile: Optional[List[Tuple[int, int]]] = Field(None, description="Pares (p, m)")
    lam: Optional[int] = Field(None, alias="lambda", ge=2, description="Módulo λ (por defecto default_lambda)")
    m: Optional[int] = Field(None, ge=1, description="Dimensión booleana de los comandos 2-D y GCP")

    # Parámetros libres: semilla u overrides explícitos
    seed: Optional[int] = Field(None, description="Semilla; None = parámetros canónicos")
    perms: Optional[List[List[int]]] = Field(None, description="π_α por factor (base 1)")
    lin_coeffs: Optional[List[List[int]]] = Field(None, description="c_{α,β}")
    consts: Optional[List[int]] = Field(None, description="c_α")
    pi: Optional[List[int]] = Field(None, description="π del par de Golay (base 1)")
    g: Optional[List[int]] = Field(None, description="g_β del par de Golay")
    e: int = 0
    e_prime: int = 0
    lambda_strategy: str = Field("consecutive", description="consecutive | random")

    # Entradas / salidas
    out: Optional[Path] = None
    format: str = FORMAT_JSON
    verify: bool = True
    report: Optional[Path] = None
    input: Optional[Path] = None
    set_a: int = Field(0, ge=0)
    set_b: int = Field(0, ge=0)
    z: Optional[int] = Field(None, ge=1)
    z1: Optional[int] = Field(None, ge=1)
    z2: Optional[int] = Field(None, ge=1)
    verbose: bool = False

    @field_validator("lambda_strategy")
    @classmethod
    def _known_strategy(cls, value: str) -> str:
        if value not in LAMBDA_STRATEGIES:
            raise ValueError(f"estrategia desconocida: {value} (use {', '.join(LAMBDA_STRATEGIES)})")
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        value = value.lower()
        if value not in (FORMAT_JSON, FORMAT_CSV):
            raise ValueError(f"formato desconocido: {value}")
        return value

    @model_validator(mode="after")
    def _required_by_command(self):
        cmd = self.command
        if cmd.needs_profile and not self.profile:
            raise ValueError(f"{cmd.value} requiere --profile")
        if cmd.needs_boolean_m and self.m is None:
            raise ValueError(f"{cmd.value} requiere --m")
        if cmd in (Command.VERIFY, Command.EXPORT_GRID) and self.input is None:
            raise ValueError(f"{cmd.value} requiere --in")
        if cmd is Command.EXPORT_GRID and self.format != FORMAT_CSV:
            raise ValueError("export-grid solo escribe CSV")
        if cmd.is_generator and self.format != FORMAT_JSON:
            raise ValueError(f"{cmd.value} solo escribe JSON")
        if cmd.needs_boolean_m and self.lam is not None and self.lam % 2:
            raise ValueError(f"{cmd.value} requiere λ par, se recibió {self.lam}")
        return self
