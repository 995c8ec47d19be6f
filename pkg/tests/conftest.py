# Configuración central de pytest y fixtures compartidos

import json
import os
import sys

import numpy as np
import pytest

# Asegurar que el directorio raíz esté en el path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


# MARKERS PERSONALIZADOS

def pytest_configure(config):
    """Registrar markers personalizados"""
    config.addinivalue_line("markers", "unit: Tests unitarios rápidos (truncamientos pequeños)")
    config.addinivalue_line("markers", "slow: Tests lentos (suites completas, d grandes)")


# FIXTURES DE MODELOS

def _build(pairs, trivial, max_degree):
    from core.domain import EigenPair, RepSpec
    from core.services.araki_woods import build_model

    spec = RepSpec(
        pairs=[EigenPair(lambda_=lam) for lam in pairs],
        trivial_dim=trivial,
        max_degree=max_degree,
    )
    return build_model(spec)


@pytest.fixture
def make_model():
    """Constructor de modelos: make_model(pairs=(2.0,), trivial=1, max_degree=3)"""

    def factory(pairs=(), trivial=0, max_degree=3):
        return _build(pairs, trivial, max_degree)

    return factory


@pytest.fixture
def trivial_model():
    """A = 1 sobre C^2: I es la conjugación"""
    return _build((), 2, 3)


@pytest.fixture
def pair_model():
    """Un par λ = 2 más una dirección trivial (d = 3)"""
    return _build((2.0,), 1, 3)


@pytest.fixture
def doubled():
    from core.services.deformation import build_doubled

    return build_doubled(_build((2.0,), 0, 3))


@pytest.fixture
def rng():
    """Generador con semilla fija para reproducibilidad"""
    return np.random.default_rng(0)


# FIXTURES DE ARCHIVOS

@pytest.fixture
def model_file(tmp_path):
    """Escribe un JSON de modelo y devuelve su ruta"""

    def write(payload: dict, name: str = "model.json"):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
