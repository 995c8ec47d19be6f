# Escritor de texto para la consola

from typing import Any, List, Optional

from adapters.outbound.reports.csv_writer import to_frame
from core.ports.report_port import ReportPayload, ReportPort


def _format(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format(v) for v in value) + "]"
    return str(value)


def _lines(data: dict, indent: int = 0) -> List[str]:
    lines = []
    pad = "   " * indent
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_lines(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}   - " + ", ".join(f"{k}={_format(v)}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {_format(value)}")
    return lines


class TextReportWriter(ReportPort):
    def render(self, payload: ReportPayload, columns: Optional[List[str]] = None) -> str:
        if hasattr(payload, "model_dump"):
            return "\n".join(_lines(payload.model_dump())) + "\n"
        frame = to_frame(payload, columns)
        return frame.to_string(index=False, float_format=lambda v: f"{v:.12g}") + "\n"
