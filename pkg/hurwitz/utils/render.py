"""
--human 输出：把报告渲染成 rich 表格
"""
from typing import Any, List

from rich.console import Console
from rich.table import Table

from hurwitz.schemas.report import Report


def _cell(value: Any) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_cell(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "; ".join(_cell(v) for v in value)
    return str(value)


def _record_table(title: str, rows: List[dict]) -> Table:
    table = Table(title=title)
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*(_cell(row.get(column, "")) for column in columns))
    return table


def render_report(report: Report, console: Console) -> None:
    summary = Table(title=" ".join(report.command), show_header=False)
    summary.add_column("key", style="bold")
    summary.add_column("value")
    nested = []
    for key, value in report.results.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            nested.append((key, value))
        else:
            summary.add_row(key, _cell(value))
    console.print(summary)
    for key, rows in nested:
        console.print(_record_table(key, rows))

    caps = report.caps
    footer = (
        f"caps: orbit={caps.max_orbit} cosets={caps.max_cosets} "
        f"elements={caps.max_elements} nodes={caps.max_nodes}"
    )
    if report.wall_time is not None:
        footer += f"  wall_time={report.wall_time:.3f}s"
    console.print(footer, style="dim")
