"""
CLI para generar y verificar conjuntos de secuencias.

Uso:
    python scripts/ccseq.py gen-gcp --m 3 --lambda 4
    python scripts/ccseq.py gen-igc --profile 2^2,3^2
    python scripts/ccseq.py gen-zcac --profile 2^2 --m 2
    python scripts/ccseq.py gen-zcacs --profile 2^2,3^2 --m 2
    python scripts/ccseq.py verify --in output/igc.json
    python scripts/ccseq.py export-grid --in output/zcacs.json --set-a 0 --set-b 1 --format csv
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import click
from dotenv import load_dotenv

load_dotenv()

from src.main import run
from src.utils.constants import LAMBDA_STRATEGIES
from src.utils.labels import parse_int_list, parse_int_rows, parse_profile


def _parsed(parser):
    """Adapta un parser de labels a callback de click."""

    def callback(ctx, param, value):
        if value is None:
            return None
        try:
            return parser(value)
        except ValueError as e:
            raise click.BadParameter(str(e)) from None

    return callback


def _apply(options, f):
    for option in reversed(options):
        f = option(f)
    return f


def output_options(f):
    return _apply(
        [
            click.option("--out", type=click.Path(path_type=Path), help="Archivo JSON de salida"),
            click.option("--format", "fmt", type=click.Choice(["json"]), default="json", show_default=True),
            click.option("--no-verify", is_flag=True, help="No verificar el conjunto generado"),
            click.option("--report", type=click.Path(path_type=Path), help="Archivo del reporte"),
            click.option("--verbose", "-v", is_flag=True, help="Log detallado en stderr"),
        ],
        f,
    )


def lambda_option(f):
    return click.option("--lambda", "lam", type=int, help="Módulo λ (por defecto el mínimo válido)")(f)


def seed_option(f):
    return click.option("--seed", type=int, help="Semilla para parámetros aleatorios")(f)


def igc_options(f):
    return _apply(
        [
            click.option("--profile", required=True, callback=_parsed(parse_profile), help="p^m[,p^m...]"),
            click.option("--perms", callback=_parsed(parse_int_rows), help="π_α por factor: '1,2;2,1'"),
            click.option("--lin", callback=_parsed(parse_int_rows), help="c_{α,β} por factor: '0,1;0'"),
            click.option("--consts", callback=_parsed(parse_int_list), help="c_α: '0,0'"),
        ],
        f,
    )


def gcp_options(f):
    return _apply(
        [
            click.option("--m", "m", type=int, required=True, help="Dimensión booleana"),
            click.option("--pi", callback=_parsed(parse_int_list), help="Permutación π (base 1)"),
            click.option("--g", callback=_parsed(parse_int_list), help="Coeficientes g_β"),
            click.option("--e", type=int, default=0, show_default=True),
            click.option("--e-prime", type=int, default=0, show_default=True),
        ],
        f,
    )


def _job(command: str, **kwargs) -> dict:
    fmt = kwargs.pop("fmt", None)
    no_verify = kwargs.pop("no_verify", False)
    lin = kwargs.pop("lin", None)
    job = {"command": command, "verify": not no_verify, "lin_coeffs": lin, **kwargs}
    if fmt is not None:
        job["format"] = fmt
    if "lam" in job:
        job["lambda"] = job.pop("lam")
    return {k: v for k, v in job.items() if v is not None}


def _exit(job: dict) -> None:
    sys.exit(run(job))


@click.group()
def cli():
    """Códigos IGC y conjuntos ZCACS 2-D a partir de funciones multivariables."""
    pass


@cli.command("gen-gcp")
@gcp_options
@lambda_option
@seed_option
@output_options
def gen_gcp(**kwargs):
    """Genera un par de Golay complementario de longitud 2^m."""
    _exit(_job("gen-gcp", **kwargs))


@cli.command("gen-igc")
@igc_options
@lambda_option
@seed_option
@output_options
def gen_igc(**kwargs):
    """Genera un conjunto IGC (K=M², M=Πp, L=Πp^m, Z=Πp^(m-1))."""
    _exit(_job("gen-igc", **kwargs))


def _two_d(command: str, help_text: str):
    @cli.command(command, help=help_text)
    @igc_options
    @gcp_options
    @lambda_option
    @seed_option
    @click.option(
        "--lambda-strategy",
        type=click.Choice(LAMBDA_STRATEGIES),
        default="consecutive",
        show_default=True,
        help="Cómo elegir Λ",
    )
    @output_options
    def command_fn(**kwargs):
        _exit(_job(command, **kwargs))

    return command_fn


gen_zcac = _two_d("gen-zcac", "Genera un ZCAC 2-D (2^m × 2L por arreglo).")
gen_zcacs = _two_d("gen-zcacs", "Genera un ZCACS 2-D con ⌊M/2⌋ conjuntos.")


@cli.command()
@click.option("--in", "input", type=click.Path(path_type=Path), required=True, help="Documento JSON")
@click.option("--z", type=int, help="ZCZ 1-D (por defecto la de la construcción)")
@click.option("--z1", type=int, help="ZCZ en filas")
@click.option("--z2", type=int, help="ZCZ en columnas")
@click.option("--report", type=click.Path(path_type=Path), help="Archivo del reporte")
@click.option("--verbose", "-v", is_flag=True)
def verify(**kwargs):
    """Verifica exhaustivamente un documento generado."""
    _exit(_job("verify", **kwargs))


@cli.command("export-grid")
@click.option("--in", "input", type=click.Path(path_type=Path), required=True, help="Documento JSON")
@click.option("--set-a", type=int, default=0, show_default=True, help="Índice del primer operando")
@click.option("--set-b", type=int, default=0, show_default=True, help="Índice del segundo operando")
@click.option("--out", type=click.Path(path_type=Path), help="Archivo CSV de salida")
@click.option("--format", "fmt", type=click.Choice(["csv"]), default="csv", show_default=True)
@click.option("--verbose", "-v", is_flag=True)
def export_grid(**kwargs):
    """Exporta la rejilla completa de correlación (tau1,tau2,re,im,abs)."""
    _exit(_job("export-grid", **kwargs))


if __name__ == "__main__":
    cli()
