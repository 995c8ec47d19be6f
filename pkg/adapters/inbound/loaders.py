# Carga y validación de las especificaciones JSON (modelo y φ)

import logging
from pathlib import Path
from typing import Union

from pydantic import TypeAdapter
from pydantic import ValidationError as PydanticValidationError

from core.domain.errors import ValidationError
from core.domain.model import RepSpec
from core.domain.radial import PhiSpec

logger = logging.getLogger(__name__)

_phi_adapter = TypeAdapter(PhiSpec)


def _read(path: Union[str, Path], field: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"No se pudo leer '{path}': {e}", field=field)


def _summary(error: PydanticValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "raíz"
    return f"{location}: {first.get('msg', 'inválido')}"


def parse_rep_spec(text: str) -> RepSpec:
    try:
        return RepSpec.model_validate_json(text)
    except PydanticValidationError as e:
        raise ValidationError(f"Modelo inválido ({_summary(e)})", field="model")


def load_rep_spec(path: Union[str, Path]) -> RepSpec:
    """{"pairs":[{"lambda":2.0,"multiplicity":1}],"trivial_dim":1,"max_degree":4}"""
    spec = parse_rep_spec(_read(path, "model"))
    logger.debug(f"Modelo cargado desde {path}: d={spec.dim}, L={spec.max_degree}")
    return spec


def parse_phi(text: str):
    try:
        return _phi_adapter.validate_json(text)
    except PydanticValidationError as e:
        raise ValidationError(f"φ inválida ({_summary(e)})", field="phi")


def load_phi(argument: str):
    """--phi acepta una ruta o el JSON en línea (empieza por '{')"""
    text = argument if argument.lstrip().startswith("{") else _read(argument, "phi")
    return parse_phi(text)
