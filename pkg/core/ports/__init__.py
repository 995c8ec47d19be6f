# Puertos del núcleo - Interfaces para salidas externas

from core.ports.report_port import ReportPort, ReportPayload

__all__ = ["ReportPort", "ReportPayload"]
