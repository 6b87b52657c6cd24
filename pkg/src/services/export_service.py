"""
Servicio de exportación: documentos JSON de conjuntos, reportes y rejillas CSV.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from src.core.algebra import PhaseArray2D, PhaseCode, PhaseSequence, RadixProfile
from src.core.errors import CcseqError, CodesetFormatError, DomainError
from src.schemas.codeset import CodesetDocument
from src.schemas.report import VerificationReport
from src.sequences.constructions import GroupLabel, ZetaQuad
from src.sequences.correlation import ShiftGrid, accf, code_accf, set_accf_2d
from src.utils.constants import GRID_COLUMNS, KIND_GCP, KIND_IGC, KIND_ZCAC, KIND_ZCACS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Codeset:
    """
    Un conjunto generado junto con su contexto.

    objects por tipo:
        gcp   -> (PhaseSequence, PhaseSequence)
        igc   -> tuple[PhaseCode, ...]
        zcac  -> tuple[PhaseArray2D, ...]
        zcacs -> tuple[tuple[PhaseArray2D, ...], ...]
    """

    kind: str
    modulus: int
    objects: tuple
    factors: tuple[tuple[int, int], ...] = ()
    boolean_m: Optional[int] = None
    quads: tuple[ZetaQuad, ...] = ()

    @property
    def profile(self) -> Optional[RadixProfile]:
        return RadixProfile(self.factors, self.modulus) if self.factors else None


# ==================== CODESET DOCUMENTS ==================== #

def _labels(codeset: Codeset) -> list[dict[str, list[int]]]:
    if codeset.kind == KIND_IGC:
        return [
            {"s": list(c.label.s), "t": list(c.label.t)}
            for c in codeset.objects
            if c.label is not None
        ]
    return [
        {"s1": list(q.s1), "s2": list(q.s2), "t1": list(q.t1), "t2": list(q.t2)}
        for q in codeset.quads
    ]


def _phases(codeset: Codeset) -> list:
    if codeset.kind == KIND_ZCACS:
        return [[a.tolist() for a in arrays] for arrays in codeset.objects]
    return [obj.tolist() for obj in codeset.objects]


def encode_codeset(codeset: Codeset) -> bytes:
    """UTF-8 JSON document; phases stay integers of Z_λ."""
    doc = CodesetDocument(
        kind=codeset.kind,
        lam=codeset.modulus,
        profile=list(codeset.factors),
        boolean_m=codeset.boolean_m,
        labels=_labels(codeset),
        phases=_phases(codeset),
    )
    return doc.model_dump_json(by_alias=True, exclude_none=True).encode("utf-8")


def decode_codeset(data: Union[bytes, str]) -> Codeset:
    """
    Inverse of encode_codeset.

    Raises:
        CodesetFormatError: invalid JSON, schema or phase values
    """
    try:
        doc = CodesetDocument.model_validate_json(data)
        doc.check_depth()
        return _from_document(doc)
    except (ValidationError, ValueError, KeyError, TypeError, CcseqError) as e:
        if isinstance(e, CodesetFormatError):
            raise
        raise CodesetFormatError(f"documento inválido: {e}") from e


def _from_document(doc: CodesetDocument) -> Codeset:
    lam = doc.lam
    factors = tuple((int(p), int(m)) for p, m in doc.profile)
    if factors:
        RadixProfile(factors, lam)

    if doc.kind == KIND_GCP:
        if len(doc.phases) != 2:
            raise CodesetFormatError("un par de Golay necesita exactamente 2 secuencias")
        objects = tuple(PhaseSequence(lam, np.array(s)) for s in doc.phases)
        return Codeset(doc.kind, lam, objects, factors, doc.boolean_m)

    if doc.kind == KIND_IGC:
        if doc.labels and len(doc.labels) != len(doc.phases):
            raise CodesetFormatError(f"{len(doc.labels)} etiquetas para {len(doc.phases)} códigos")
        labels = [GroupLabel(lab["s"], lab["t"]) for lab in doc.labels] or [None] * len(doc.phases)
        objects = tuple(PhaseCode(lam, np.array(rows), label) for rows, label in zip(doc.phases, labels))
        return Codeset(doc.kind, lam, objects, factors, doc.boolean_m)

    quads = tuple(ZetaQuad(q["s1"], q["s2"], q["t1"], q["t2"]) for q in doc.labels)
    if doc.kind == KIND_ZCAC:
        objects = tuple(PhaseArray2D(lam, np.array(a)) for a in doc.phases)
    else:
        objects = tuple(tuple(PhaseArray2D(lam, np.array(a)) for a in arrays) for arrays in doc.phases)
    return Codeset(doc.kind, lam, objects, factors, doc.boolean_m, quads)


def write_codeset(codeset: Codeset, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_codeset(codeset))
    logger.info("Conjunto %s escrito en %s", codeset.kind, path)
    return path


def read_codeset(path: Path) -> Codeset:
    return decode_codeset(Path(path).read_bytes())


# ==================== REPORTES ==================== #

def write_report(report: VerificationReport, path: Path) -> Path:
    """JSON {claim, params, passed, peak, violations, violation_count, max_residual, notes}."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    logger.info("Reporte %s escrito en %s", report.claim.value, path)
    return path


# ==================== REJILLA DE CORRELACIÓN ==================== #

GridOperand = Union[PhaseSequence, PhaseCode, Sequence[PhaseArray2D]]


def correlation_grid(first: GridOperand, second: GridOperand) -> pd.DataFrame:
    """
    Correlación en el rectángulo completo |τ1| < L1, |τ2| < L2.

    Secuencias y códigos son 1-D (τ2 = 0); los conjuntos de arreglos usan la
    suma de correlaciones 2-D por arreglo.
    """
    if isinstance(first, PhaseSequence):
        grid = ShiftGrid.window(len(first))
        values = ((t1, 0, accf(first, second, t1)) for (t1,) in grid)
    elif isinstance(first, PhaseCode):
        grid = ShiftGrid.window(first.shape[1])
        values = ((t1, 0, code_accf(first, second, t1)) for (t1,) in grid)
    else:
        if not first:
            raise DomainError("empty array set")
        l1, l2 = first[0].shape
        grid = ShiftGrid.zcz(l1, l2)
        values = ((t1, t2, set_accf_2d(first, second, t1, t2)) for t1, t2 in grid)

    rows = []
    for t1, t2, value in values:
        z = value.complex
        rows.append((t1, t2, z.real, z.imag, abs(z)))
    df = pd.DataFrame(rows, columns=GRID_COLUMNS)
    # Quita el ruido de redondeo (incluido -0.0) para que el CSV sea estable
    for col in ("re", "im", "abs"):
        df[col] = df[col].round(12) + 0.0
    return df


def write_grid(df: pd.DataFrame, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\r\n", encoding="utf-8")
    logger.info("Rejilla de %d desplazamientos escrita en %s", len(df), path)
    return path
