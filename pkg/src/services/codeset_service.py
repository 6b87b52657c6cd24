"""
Servicio para generar y verificar conjuntos de códigos.
Traduce un JobSpec en parámetros de construcción y elige el verificador.
"""
from __future__ import annotations

import logging
from typing import Optional

from src.core.algebra import RadixProfile
from src.core.config import settings
from src.core.errors import ParameterError
from src.schemas.job import Command, JobSpec
from src.schemas.report import VerificationReport
from src.sequences.constructions import (
    GcpParams,
    IgcParams,
    build_igc_codeset,
    build_zcac,
    build_zcacs,
    default_lambda,
    enumerate_lambda_set,
    paterson_pair,
)
from src.sequences.verification import (
    verify_gcp,
    verify_igc,
    verify_zcac,
    verify_zcacs,
    verify_zccs,
    verify_zcp,
)
from src.services.export_service import Codeset
from src.utils.constants import KIND_GCP, KIND_IGC, KIND_ZCAC, KIND_ZCACS
from src.utils.labels import format_profile

logger = logging.getLogger(__name__)


class CodesetService:
    """
    Servicio de negocio para conjuntos de códigos.
    Centraliza la elección de λ, de parámetros libres y de ZCZ.
    """

    def __init__(self, seed: Optional[int] = None):
        self.default_seed = settings.default_seed if seed is None else seed

    # ---------- parámetros ---------- #

    @staticmethod
    def modulus_for(job: JobSpec) -> int:
        """λ explícito o default_lambda (par para los comandos 2-D)."""
        if job.lam is not None:
            return job.lam
        if job.command is Command.GEN_GCP:
            return 2
        return default_lambda(job.profile, need_even=job.command.needs_boolean_m)

    @staticmethod
    def igc_params(job: JobSpec, profile: RadixProfile) -> IgcParams:
        if job.seed is not None:
            return IgcParams.random(profile, job.seed)
        return IgcParams(
            profile,
            tuple(tuple(p) for p in job.perms or ()),
            tuple(tuple(c) for c in job.lin_coeffs or ()),
            tuple(job.consts or ()),
        )

    @staticmethod
    def gcp_params(job: JobSpec, modulus: int) -> GcpParams:
        if job.seed is not None:
            return GcpParams.random(job.m, modulus, job.seed)
        return GcpParams(job.m, modulus, tuple(job.pi or ()), tuple(job.g or ()), job.e, job.e_prime)

    # ---------- generación ---------- #

    def generate(self, job: JobSpec) -> Codeset:
        """Construye el conjunto pedido por un comando gen-*."""
        if not job.command.is_generator:
            raise ParameterError(f"{job.command.value} no genera conjuntos")
        lam = self.modulus_for(job)

        if job.command is Command.GEN_GCP:
            gp = self.gcp_params(job, lam)
            logger.info("Generando GCP m=%d λ=%d", gp.m, lam)
            return Codeset(KIND_GCP, lam, paterson_pair(gp), boolean_m=gp.m)

        profile = RadixProfile(tuple(tuple(f) for f in job.profile), lam)
        params = self.igc_params(job, profile)
        logger.info("Generando %s perfil=%s λ=%d", job.command.value, format_profile(profile.factors), lam)

        if job.command is Command.GEN_IGC:
            return Codeset(KIND_IGC, lam, build_igc_codeset(params), profile.factors)

        gp = self.gcp_params(job, lam)
        seed = self.default_seed if job.seed is None else job.seed
        quads = enumerate_lambda_set(profile, job.lambda_strategy, seed)
        if job.command is Command.GEN_ZCAC:
            return Codeset(KIND_ZCAC, lam, build_zcac(params, gp, quads[0]), profile.factors, gp.m, quads[:1])
        return Codeset(KIND_ZCACS, lam, build_zcacs(params, gp, quads), profile.factors, gp.m, quads)

    # ---------- verificación ---------- #

    @staticmethod
    def claimed_zcz(codeset: Codeset, job: Optional[JobSpec] = None) -> tuple[int, ...]:
        """
        ZCZ que el conjunto debe cumplir: la de la construcción o la que
        indique el trabajo (--z, --z1, --z2).
        """
        profile = codeset.profile
        if codeset.kind == KIND_GCP:
            return (job.z if job and job.z else len(codeset.objects[0]),)
        if codeset.kind == KIND_IGC:
            if job and job.z:
                return (job.z,)
            if profile is None:
                raise ParameterError("sin perfil en el documento: indique --z")
            return (profile.zcz_width,)

        z1 = job.z1 if job and job.z1 else None
        z2 = job.z2 if job and job.z2 else None
        if z1 is None:
            if codeset.boolean_m is None:
                raise ParameterError("sin boolean_m en el documento: indique --z1")
            z1 = 2**codeset.boolean_m
        if z2 is None:
            if profile is None:
                raise ParameterError("sin perfil en el documento: indique --z2")
            z2 = profile.zcz_width
        return z1, z2

    def verify(self, codeset: Codeset, job: Optional[JobSpec] = None) -> VerificationReport:
        """Verificación exhaustiva según el tipo de conjunto."""
        zcz = self.claimed_zcz(codeset, job)
        if codeset.kind == KIND_GCP:
            a, b = codeset.objects
            if zcz[0] == len(a):
                return verify_gcp(a, b)
            return verify_zcp(a, b, zcz[0])
        if codeset.kind == KIND_IGC:
            if any(code.label is None for code in codeset.objects):
                logger.info("Códigos sin etiquetas de grupo: se verifica como ZCCS")
                return verify_zccs(codeset.objects, zcz[0])
            return verify_igc(codeset.objects, zcz[0])
        if codeset.kind == KIND_ZCAC:
            return verify_zcac(codeset.objects, *zcz)
        return verify_zcacs(codeset.objects, *zcz)
