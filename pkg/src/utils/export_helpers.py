"""
Export Helper Utilities

Writes catalog tables and verification reports as CSV, JSON or
plain-text tables.
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Union

import pandas as pd
from tabulate import tabulate

from ..exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class ExportHelper:
    """
    Exports DataFrames to the formats the command line offers.

    Formats are looked up in `supported_formats`, keyed by name.
    """

    def __init__(self, float_digits: int = 12):
        """
        Initialize the export helper.

        Args:
            float_digits: Significant digits for floats in text and JSON output
        """
        self.float_digits = float_digits
        self.supported_formats = {
            "csv": self.export_to_csv,
            "json": self.export_to_json,
            "txt": self.export_to_text,
        }

    def export_data(self, data: pd.DataFrame, format_type: str, output_path: PathLike, **kwargs) -> int:
        """
        Export data to the given format.

        Args:
            data: Table to write
            format_type: One of supported_formats
            output_path: Output file path
            **kwargs: Format-specific options

        Returns:
            Number of rows written
        """
        if format_type not in self.supported_formats:
            raise InvalidParameterError(
                f"Unsupported export format {format_type!r}; expected one of {', '.join(self.supported_formats)}"
            )
        Path(output_path).parent.mkdir(parents=True, exist_ok=True)
        return self.supported_formats[format_type](data, Path(output_path), **kwargs)

    def export_to_csv(self, data: pd.DataFrame, output_path: Path) -> int:
        data.to_csv(output_path, index=False, encoding="utf-8", float_format=f"%.{self.float_digits}g")
        logger.info("Exported %d rows to CSV: %s", len(data), output_path)
        return len(data)

    def export_to_json(self, data: pd.DataFrame, output_path: Path, metadata: Dict[str, Any] = None) -> int:
        """
        Export rows as a JSON document with a small metadata header.

        Args:
            data: Table to write
            output_path: Output file path
            metadata: Extra header fields

        Returns:
            Number of rows written
        """
        export_structure = {
            "metadata": {
                "exported_at": datetime.now().isoformat(timespec="seconds"),
                "rows": len(data),
                "columns": list(data.columns),
                **(metadata or {}),
            },
            "data": self.frame_records(data),
        }
        with open(output_path, "w", encoding="utf-8") as f:
            json.dump(export_structure, f, ensure_ascii=False, indent=2)
        logger.info("Exported %d rows to JSON: %s", len(data), output_path)
        return len(data)

    def export_to_text(self, data: pd.DataFrame, output_path: Path) -> int:
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(self.render_table(data) + "\n")
        logger.info("Exported %d rows to text: %s", len(data), output_path)
        return len(data)

    def render_table(self, data: pd.DataFrame) -> str:
        return tabulate(data.values.tolist(), headers=list(data.columns), floatfmt=f".{self.float_digits}g")

    def frame_records(self, data: pd.DataFrame) -> list:
        records = []
        for record in data.to_dict(orient="records"):
            records.append({k: self._plain(v) for k, v in record.items()})
        return records

    def _plain(self, value: Any) -> Any:
        if hasattr(value, "item"):
            value = value.item()
        if isinstance(value, float):
            return float(f"{value:.{self.float_digits}g}")
        return value
