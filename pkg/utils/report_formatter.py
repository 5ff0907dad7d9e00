import csv
import io
import json
import math
from typing import Any, List

import numpy as np

from config import Config
from models.report import Report
from utils.errors import ParameterError


class ReportFormatter:
    """Utility class rendering reports as json, csv or text"""

    @staticmethod
    def round_significant(value: float, digits: int) -> float:
        """Round to a number of significant digits through the shortest repr"""
        if not math.isfinite(value) or value == 0.0:
            return value
        return float(f"{value:.{digits}g}")

    @staticmethod
    def machine_value(value: Any) -> Any:
        """Normalize a value for JSON: numpy scalars unwrapped, floats at MACHINE_DIGITS"""
        if isinstance(value, dict):
            return {str(key): ReportFormatter.machine_value(item) for key, item in value.items()}
        if isinstance(value, (list, tuple, np.ndarray)):
            return [ReportFormatter.machine_value(item) for item in value]
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            value = float(value)
            if not math.isfinite(value):
                return None
            return ReportFormatter.round_significant(value, Config.MACHINE_DIGITS)
        return value

    @staticmethod
    def cell(value: Any, digits: int) -> str:
        if value is None:
            return ""
        if isinstance(value, (bool, np.bool_)):
            return "true" if value else "false"
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            return f"{float(value):.{digits}g}"
        if isinstance(value, (list, tuple, np.ndarray)):
            return ' '.join(ReportFormatter.cell(item, digits) for item in value)
        return str(value)

    @staticmethod
    def to_json(report: Report) -> str:
        return json.dumps(ReportFormatter.machine_value(report.to_dict()), indent=2) + '\n'

    @staticmethod
    def to_csv(report: Report) -> str:
        """Header row always present; a report without a table becomes key,value rows"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        digits = Config.MACHINE_DIGITS
        if report.has_table:
            writer.writerow(report.columns)
            for row in report.rows:
                writer.writerow([ReportFormatter.cell(value, digits) for value in row])
        else:
            writer.writerow(['key', 'value'])
            for key, value in report.data.items():
                writer.writerow([key, ReportFormatter.cell(value, digits)])
        return buffer.getvalue()

    @staticmethod
    def to_text(report: Report) -> str:
        digits = Config.TEXT_DIGITS
        lines: List[str] = [report.command]
        for key, value in report.data.items():
            if isinstance(value, dict):
                lines.append(f"  {key}:")
                for inner_key, inner in value.items():
                    lines.append(f"    {inner_key}: {ReportFormatter.cell(inner, digits)}")
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                # row documents are printed as the table below
                continue
            else:
                lines.append(f"  {key}: {ReportFormatter.cell(value, digits)}")
        if report.has_table:
            cells = [[ReportFormatter.cell(value, digits) for value in row] for row in report.rows]
            widths = [len(column) for column in report.columns]
            for row in cells:
                widths = [max(width, len(value)) for width, value in zip(widths, row)]
            lines.append('')
            lines.append('  '.join(column.rjust(width) for column, width in zip(report.columns, widths)))
            for row in cells:
                lines.append('  '.join(value.rjust(width) for value, width in zip(row, widths)))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def render(report: Report, fmt: str) -> str:
        if fmt == 'json':
            return ReportFormatter.to_json(report)
        if fmt == 'csv':
            return ReportFormatter.to_csv(report)
        if fmt == 'text':
            return ReportFormatter.to_text(report)
        raise ParameterError(f"Unknown format {fmt!r}; choose one of {', '.join(Config.OUTPUT_FORMATS)}")


# Convenience function
def render_report(report: Report, fmt: str) -> str:
    return ReportFormatter.render(report, fmt)
