# Puerto de salida de reportes

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Sequence, Union

from pydantic import BaseModel

# Un reporte individual o una tabla de filas homogéneas
ReportPayload = Union[BaseModel, Sequence[BaseModel]]


class ReportPort(ABC):
    """Puerto para emitir reportes en un formato concreto"""

    @abstractmethod
    def render(self, payload: ReportPayload, columns: Optional[List[str]] = None) -> str:
        """
        Serializa el reporte a texto.

        Args:
            payload: Reporte pydantic o lista de filas
            columns: Subconjunto y orden de columnas (sólo tablas)

        Returns:
            Texto listo para imprimir o guardar
        """
        pass

    def write(
        self, payload: ReportPayload, path: Union[str, Path], columns: Optional[List[str]] = None
    ) -> Path:
        """Guarda el reporte en path (UTF-8, saltos de línea LF)"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.render(payload, columns))
        return path
