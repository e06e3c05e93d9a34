"""
一次命令调用的上下文：命令行回显、输入摘要、输出方式
"""
import hashlib
import time
from typing import Any, Dict, List, Optional, Sequence

import click
from rich.console import Console

from hurwitz.core.exceptions import CapExceeded
from hurwitz.schemas.caps import Caps
from hurwitz.schemas.report import Report
from hurwitz.utils.render import render_report


class Session:
    def __init__(self, argv: Sequence[str] = ()):
        self.argv: List[str] = list(argv)
        self._digest = hashlib.sha256()
        for arg in self.argv:
            self._digest.update(arg.encode("utf-8"))
            self._digest.update(b"\0")
        self.started = time.perf_counter()
        self.caps: Caps = Caps.from_settings()
        self.human = False
        self.timing = False

    def record_input(self, data: bytes) -> None:
        self._digest.update(data)

    def report(self, results: Dict[str, Any]) -> Report:
        wall_time: Optional[float] = None
        if self.timing:
            wall_time = round(time.perf_counter() - self.started, 6)
        return Report(
            command=["hurwitz", *self.argv],
            inputs_digest=self._digest.hexdigest(),
            results=results,
            caps=self.caps,
            wall_time=wall_time,
        )

    def emit(self, results: Dict[str, Any]) -> None:
        report = self.report(results)
        if self.human:
            render_report(report, Console())
        else:
            click.echo(report.to_json())

    def emit_cap_exceeded(self, error: CapExceeded) -> None:
        self.emit(
            {
                "status": "cap_exceeded",
                "cap": error.cap,
                "limit": error.limit,
                "detail": str(error),
            }
        )
