"""
Main application entry point.
Ejecuta un JobSpec y devuelve el código de salida del CLI.
"""
import logging
from pathlib import Path
from typing import Union

import click
from pydantic import ValidationError

from src.core.config import settings
from src.core.errors import CcseqError, CodesetFormatError, DomainError, RangeError
from src.schemas.job import Command, JobSpec
from src.services.codeset_service import CodesetService
from src.services.export_service import (
    Codeset,
    correlation_grid,
    read_codeset,
    write_codeset,
    write_grid,
    write_report,
)
from src.utils.constants import (
    DEFAULT_CODESET_FILE,
    DEFAULT_GRID_FILE,
    EXIT_INVALID_PARAMS,
    EXIT_IO_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    KIND_ZCAC,
    KIND_ZCACS,
)
from src.utils.logging_config import enable_console_logging, get_app_logger

logger = logging.getLogger(__name__)


def _report_path(data_path: Path, job: JobSpec) -> Path:
    return job.report or data_path.with_name(f"{data_path.stem}_report.json")


def _generate(job: JobSpec, service: CodesetService) -> int:
    codeset = service.generate(job)
    report = service.verify(codeset) if job.verify else None

    out = job.out or Path(settings.output_dir) / DEFAULT_CODESET_FILE.format(kind=codeset.kind)
    write_codeset(codeset, out)
    click.echo(f"✓ {codeset.kind}: {len(codeset.objects)} objetos -> {out}")

    if report is None:
        return EXIT_OK
    report_path = write_report(report, _report_path(out, job))
    click.echo(f"{'✓' if report.passed else '✗'} {report.summary()} -> {report_path}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _verify(job: JobSpec, service: CodesetService) -> int:
    codeset = read_codeset(job.input)
    try:
        report = service.verify(codeset, job)
    except DomainError as e:
        raise CodesetFormatError(f"documento inconsistente: {e}") from e
    report_path = write_report(report, _report_path(job.input, job))
    click.echo(f"{'✓' if report.passed else '✗'} {report.summary()} -> {report_path}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _grid_operands(codeset: Codeset, a: int, b: int):
    """
    Operandos de la rejilla: secuencias o códigos por índice; para documentos
    2-D los índices eligen conjuntos (un zcac es un único conjunto).
    """
    items = (codeset.objects,) if codeset.kind == KIND_ZCAC else codeset.objects
    for index in (a, b):
        if index >= len(items):
            raise RangeError(f"índice {index} fuera de [0, {len(items)})")
    return items[a], items[b]


def _export_grid(job: JobSpec) -> int:
    codeset = read_codeset(job.input)
    first, second = _grid_operands(codeset, job.set_a, job.set_b)
    try:
        df = correlation_grid(first, second)
    except DomainError as e:
        raise CodesetFormatError(f"documento inconsistente: {e}") from e
    out = job.out or Path(settings.output_dir) / DEFAULT_GRID_FILE
    write_grid(df, out)
    dims = "2-D" if codeset.kind in (KIND_ZCAC, KIND_ZCACS) else "1-D"
    click.echo(f"✓ Rejilla {dims} de {len(df)} desplazamientos -> {out}")
    return EXIT_OK


def run(job: Union[JobSpec, dict]) -> int:
    """
    Ejecuta un trabajo.

    Returns:
        0 si todas las verificaciones pasan, 1 si alguna falla,
        2 si los parámetros son inválidos (sin escribir nada),
        3 ante errores de E/S o documentos ilegibles.
    """
    get_app_logger()
    try:
        if not isinstance(job, JobSpec):
            job = JobSpec.model_validate(job)
        if job.verbose:
            enable_console_logging()

        service = CodesetService()
        if job.command.is_generator:
            return _generate(job, service)
        if job.command is Command.VERIFY:
            return _verify(job, service)
        return _export_grid(job)

    except (OSError, CodesetFormatError) as e:
        logger.error("E/S: %s", e)
        click.echo(f"Error de E/S: {e}", err=True)
        return EXIT_IO_ERROR
    except (ValidationError, CcseqError, ValueError) as e:
        logger.error("Parámetros inválidos: %s", e)
        click.echo(f"Parámetros inválidos: {e}", err=True)
        return EXIT_INVALID_PARAMS
