# Escritor JSON: espejo legible por máquina de cada reporte

import json
from typing import List, Optional

from core.ports.report_port import ReportPayload, ReportPort


class JsonReportWriter(ReportPort):
    def render(self, payload: ReportPayload, columns: Optional[List[str]] = None) -> str:
        if hasattr(payload, "model_dump_json"):
            return payload.model_dump_json(indent=2) + "\n"
        rows = [row.model_dump(mode="json") for row in payload]
        if columns is not None:
            rows = [{c: row.get(c) for c in columns} for row in rows]
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
