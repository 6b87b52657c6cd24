"""
Servicios de negocio.
"""
from .codeset_service import CodesetService
from .export_service import Codeset, correlation_grid, decode_codeset, encode_codeset, write_report

__all__ = [
    "CodesetService",
    "Codeset",
    "correlation_grid",
    "decode_codeset",
    "encode_codeset",
    "write_report",
]
