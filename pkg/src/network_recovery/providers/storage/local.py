"""
Local Storage Provider Implementation
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ...models import CSV_HEADER, ROBUSTNESS_HEADER, BenchRow, Point2, RobustnessRow, RunRecord
from ..base import ResultStore


def render_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """CSV text with a fixed header and '\\n' line endings"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_plot_data(rows: Sequence[BenchRow]) -> str:
    """'coverage mean_added mean_final' lines ordered by scenario target"""
    lines = ["# coverage mean_added mean_final"]
    for row in sorted(rows, key=lambda r: r.target):
        lines.append(f"{row.target:.4f} {row.mean_added:.4f} {row.mean_final:.4f}")
    return "\n".join(lines) + "\n"


class LocalResultStore(ResultStore):
    """Local file system result storage"""

    def __init__(self, config: Dict[str, Any]):
        """Initialize local result store

        Config should include:
        - base_path: Directory for relative keys (default: 'results')
        - create_dirs: Whether to create it up front (default: True)
        """
        super().__init__(config)

        self.base_path = Path(config.get("base_path", "results"))

        if config.get("create_dirs", True):
            self.base_path.mkdir(parents=True, exist_ok=True)

    def _resolve(self, key: str, extension: str) -> Path:
        if not key.endswith(extension):
            key = f"{key}{extension}"
        path = Path(key)
        file_path = path if path.is_absolute() else self.base_path / path
        file_path.parent.mkdir(parents=True, exist_ok=True)
        return file_path

    async def save_recovery(self, data: Dict[str, Any], key: str) -> str:
        file_path = self._resolve(key, ".json")
        file_path.write_text(json.dumps(data, indent=2) + "\n")
        return str(file_path)

    async def save_bench_table(self, rows: Sequence[BenchRow], key: str) -> str:
        file_path = self._resolve(key, ".csv")
        file_path.write_text(render_csv(CSV_HEADER, [row.to_csv_row() for row in rows]))
        return str(file_path)

    async def save_run_records(
        self,
        records: Sequence[RunRecord],
        key: str,
        metadata: Optional[Dict[str, Any]] = None
    ) -> str:
        """Save per-run records; metadata goes under its own key"""
        file_path = self._resolve(key, ".json")
        data: Dict[str, Any] = {"runs": [record.to_dict() for record in records]}
        if metadata:
            data["metadata"] = metadata
        file_path.write_text(json.dumps(data, indent=2, default=str) + "\n")
        return str(file_path)

    async def save_plot_data(self, rows: Sequence[BenchRow]) -> Dict[str, str]:
        by_strategy: Dict[str, List[BenchRow]] = {}
        for row in rows:
            by_strategy.setdefault(row.strategy, []).append(row)

        result = {}
        for strategy, strategy_rows in by_strategy.items():
            file_path = self._resolve(f"plot_{strategy}", ".dat")
            file_path.write_text(render_plot_data(strategy_rows))
            result[strategy] = str(file_path)
        return result

    async def save_robustness_table(self, rows: Sequence[RobustnessRow], key: str) -> str:
        file_path = self._resolve(key, ".csv")
        file_path.write_text(render_csv(ROBUSTNESS_HEADER, [row.to_csv_row() for row in rows]))
        return str(file_path)

    async def save_points(self, points: Sequence[Point2], key: str) -> str:
        file_path = self._resolve(key, ".json")
        file_path.write_text(json.dumps([p.to_list() for p in points]) + "\n")
        return str(file_path)

    def get_storage_type(self) -> str:
        """Get the type of storage"""
        return "local"
