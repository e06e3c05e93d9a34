"""
hurwitz 命令行应用

退出码：0 成功，1 用法或输入错误，2 资源上限耗尽。
"""
from typing import Sequence

import click
import structlog

from hurwitz.cli.commands import component, example, galois, group, lifting, monoid
from hurwitz.cli.session import Session
from hurwitz.core.config import settings
from hurwitz.core.exceptions import CapExceeded, HurwitzError
from hurwitz.core.logging import configure_logging

logger = structlog.get_logger(__name__)


@click.group(name="hurwitz")
@click.version_option(settings.VERSION, prog_name=settings.PROJECT_NAME)
def cli() -> None:
    """Hurwitz 空间连通分支的组合计算"""
    configure_logging(settings.LOG_LEVEL, settings.LOG_JSON)


for module in (group, component, monoid, galois, lifting, example):
    module.register(cli)


def run(argv: Sequence[str]) -> int:
    """执行一次命令并返回退出码；报告写标准输出，错误写标准错误"""
    session = Session(argv)
    try:
        result = cli.main(
            args=list(argv), prog_name="hurwitz", standalone_mode=False, obj=session
        )
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except CapExceeded as e:
        logger.warning("资源上限耗尽", cap=e.cap, limit=e.limit)
        session.emit_cap_exceeded(e)
        return e.exit_code
    except HurwitzError as e:
        click.echo(f"Error: {e}", err=True)
        return e.exit_code
    return result if isinstance(result, int) else 0
