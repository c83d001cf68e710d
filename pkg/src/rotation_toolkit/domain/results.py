import csv
import math
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from rotation_toolkit.domain.types import Command, OutputFormat


class SummaryLine(BaseModel):
    """One estimate as printed on stdout: label, value, se, n, seed."""
    model_config = ConfigDict(frozen=True)

    label : str
    value : float
    se : float
    n : int
    seed : int | None = None

    def format(self) -> str:
        se = "nan" if math.isnan(self.se) else f"{self.se:.3g}"
        return f"{self.label} {self.value!r} {se} {self.n} {self.seed if self.seed is not None else '-'}"


def format_cell(value: Any, digits: int) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, f".{digits}g")
    return str(value)


class ExperimentResult(BaseModel):
    """Tabular output of one command plus its summary lines."""
    command : Command
    columns : list[str]
    records : list[dict[str, Any]]
    summaries : list[SummaryLine] = Field(default_factory=list)

    def write(self, path: Path, fmt: OutputFormat, digits: int) -> Path:
        """
        Write the records as CSV or JSON.

        Args:
            path: Target file; parent directories are created.
            fmt: Output format.
            digits: Significant digits of floats in CSV output.

        Returns:
            The path written.
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == OutputFormat.JSON:
            path.write_text(self.model_dump_json(indent=2) + "\n", encoding="utf-8")
        else:
            with open(path, "w", encoding="utf-8", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(self.columns)
                for record in self.records:
                    writer.writerow([format_cell(record.get(column), digits) for column in self.columns])

        logger.info(f"Wrote {len(self.records)} {self.command.value} records to {path}")
        return path
