"""
Configuración centralizada de la aplicación usando Pydantic Settings.
"""
from pathlib import Path
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


# Rutas base
BASE_DIR = Path(__file__).resolve().parent.parent.parent
LOGS_DIR = BASE_DIR / "logs"
OUTPUT_DIR = BASE_DIR / "output"


class Settings(BaseSettings):
    """Configuración de la aplicación con validación de Pydantic."""

    model_config = SettingsConfigDict(
        env_prefix="CCSEQ_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Aplicación
    app_name: str = Field(default="ccseq", description="Nombre de la aplicación")
    threads: int = Field(default=1, ge=1, description="Hilos máximos para los barridos de correlación")

    # Logging
    log_level: str = Field(default="INFO", description="Nivel de logging")
    log_to_file: bool = Field(default=True, description="Escribir el log a archivo")
    log_file: str = Field(
        default=str(LOGS_DIR / "ccseq.log"),
        description="Archivo de log"
    )
    log_max_bytes: int = Field(default=10_485_760, description="Tamaño máximo del log (10MB)")
    log_backup_count: int = Field(default=5, description="Número de backups del log")

    # Verificación
    violation_cap: int = Field(default=100, ge=0, description="Violaciones máximas listadas por reporte")
    float_tolerance: float = Field(default=1e-6, gt=0, description="Tolerancia relativa de la imagen compleja")

    # Generación
    default_seed: int = Field(default=0, description="Semilla por defecto para parámetros aleatorios")
    output_dir: str = Field(default=str(OUTPUT_DIR), description="Directorio de salida por defecto")

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"nivel de logging inválido: {value}")
        return value


@lru_cache
def get_settings() -> Settings:
    """Obtiene la configuración singleton."""
    return Settings()


# Instancia global de configuración
settings = get_settings()
