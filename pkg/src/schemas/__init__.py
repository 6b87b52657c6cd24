"""
Schemas Pydantic para validación y serialización.
"""
from .codeset import CodesetDocument
from .job import Command, JobSpec
from .report import ClaimKind, VerificationReport, Violation

__all__ = [
    "CodesetDocument",
    "Command",
    "JobSpec",
    "ClaimKind",
    "VerificationReport",
    "Violation",
]
