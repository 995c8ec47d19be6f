# Escritor CSV con pandas (cabecera, coma, LF, 17 cifras significativas)

import logging
from typing import List, Optional

import pandas as pd

from core.ports.report_port import ReportPayload, ReportPort

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def to_frame(payload: ReportPayload, columns: Optional[List[str]] = None) -> pd.DataFrame:
    """Aplana uno o varios reportes pydantic en un DataFrame (campos anidados como a.b)"""
    rows = [payload] if hasattr(payload, "model_dump") else list(payload)
    frame = pd.json_normalize([row.model_dump() for row in rows])
    if columns is not None:
        missing = [c for c in columns if c not in frame.columns]
        if missing and len(frame):
            raise KeyError(f"Columnas inexistentes en el reporte: {missing}")
        frame = frame.reindex(columns=columns)
    return frame


class CsvReportWriter(ReportPort):
    """Tablas numéricas para graficar sin recalcular"""

    def render(self, payload: ReportPayload, columns: Optional[List[str]] = None) -> str:
        frame = to_frame(payload, columns)
        logger.debug(f"CSV: {len(frame)} filas, columnas {list(frame.columns)}")
        return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
