# Escritores de reportes
from adapters.outbound.reports.csv_writer import CsvReportWriter, to_frame
from adapters.outbound.reports.json_writer import JsonReportWriter
from adapters.outbound.reports.text_writer import TextReportWriter

__all__ = ["CsvReportWriter", "JsonReportWriter", "TextReportWriter", "to_frame"]
