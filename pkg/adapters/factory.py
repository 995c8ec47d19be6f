# Fábrica - Crea los escritores de reportes por formato de salida

from typing import Dict, Optional

from adapters.outbound.reports import CsvReportWriter, JsonReportWriter, TextReportWriter
from core.domain.errors import ValidationError
from core.ports.report_port import ReportPort

FORMATS = ("text", "json", "csv")


class WriterContainer:
    """Contenedor de escritores. Crea cada escritor concreto una sola vez."""

    def __init__(self):
        self._writers: Dict[str, ReportPort] = {}

    def _get(self, fmt: str, factory) -> ReportPort:
        if fmt not in self._writers:
            self._writers[fmt] = factory()
        return self._writers[fmt]

    @property
    def text(self) -> ReportPort:
        return self._get("text", TextReportWriter)

    @property
    def json(self) -> ReportPort:
        return self._get("json", JsonReportWriter)

    @property
    def csv(self) -> ReportPort:
        return self._get("csv", CsvReportWriter)


_container: Optional[WriterContainer] = None


def get_container() -> WriterContainer:
    global _container
    if _container is None:
        _container = WriterContainer()
    return _container


def get_writer(fmt: str) -> ReportPort:
    """Escritor para 'text', 'json' o 'csv'"""
    if fmt not in FORMATS:
        raise ValidationError(
            f"Formato de salida desconocido '{fmt}'. Opciones: {', '.join(FORMATS)}",
            field="format",
        )
    return getattr(get_container(), fmt)


def writer_for_path(path: str, default: str = "text") -> ReportPort:
    """Elige el escritor por extensión del archivo de salida"""
    suffix = str(path).rsplit(".", 1)[-1].lower() if "." in str(path) else ""
    return get_writer(suffix if suffix in FORMATS else default)
