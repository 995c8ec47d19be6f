# Configuración centralizada usando Pydantic Settings

import os
from pathlib import Path
from dotenv import load_dotenv
from pydantic_settings import BaseSettings

BASE_DIR = Path(__file__).resolve().parent.parent
load_dotenv(BASE_DIR / ".env")


# Espacio de Fock truncado y cálculo de normas
class FockSettings(BaseSettings):
    # SVD densa hasta este total_dim, iteración de potencia por encima
    svd_threshold: int = int(os.getenv("FOCK_SVD_THRESHOLD", "2000"))
    power_max_iter: int = int(os.getenv("FOCK_POWER_MAX_ITER", "10000"))
    power_tol: float = float(os.getenv("FOCK_POWER_TOL", "1e-12"))

    # Presupuesto de memoria: dimensión máxima de un espacio truncado
    max_total_dim: int = int(os.getenv("FOCK_MAX_TOTAL_DIM", "2000000"))

    # Tolerancia para chequeos estructurales (ortonormalidad, K_R, ITI = T)
    identity_tol: float = float(os.getenv("FOCK_IDENTITY_TOL", "1e-12"))


class MultiplierSettings(BaseSettings):
    # Tamaño de Hankel para ψ_t: ceil(geometric_tail / t)
    geometric_tail: float = float(os.getenv("MULT_GEOMETRIC_TAIL", "30.0"))
    haagerup_search_cap: int = int(os.getenv("MULT_HAAGERUP_CAP", "10000"))
    toeplitz_trials: int = int(os.getenv("MULT_TOEPLITZ_TRIALS", "200"))
    # Lado máximo de la matriz de Hankel antes de reservar memoria
    hankel_max_size: int = int(os.getenv("MULT_HANKEL_MAX", "5001"))

    # Número máximo de bandas para la búsqueda exhaustiva de rango mínimo
    band_exhaustive_limit: int = int(os.getenv("MULT_BAND_EXHAUSTIVE", "16"))


class VerifySettings(BaseSettings):
    seed: int = int(os.getenv("LAB_SEED", "0"))
    workers: int = int(os.getenv("LAB_WORKERS", "1"))


class LogSettings(BaseSettings):
    level: str = os.getenv("LOG_LEVEL", "INFO")


# Configuración principal de la aplicación
class Settings(BaseSettings):
    app_name: str = "Fock-Lab"
    debug: bool = os.getenv("DEBUG", "false").lower() == "true"

    fock: FockSettings = FockSettings()
    multipliers: MultiplierSettings = MultiplierSettings()
    verify: VerifySettings = VerifySettings()
    logs: LogSettings = LogSettings()


settings = Settings()
