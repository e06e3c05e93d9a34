"""
可复现算例
"""
from typing import Any, Dict

import click

from hurwitz.cli.options import common_options
from hurwitz.cli.session import Session
from hurwitz.schemas.caps import Caps
from hurwitz.services.examples import EXAMPLES, run_example

EXAMPLE_NUMBERS: Dict[str, str] = {
    "2.13": "cyclic-rationality",
    "2.14": "transposition-rationality",
    "3.15": "complete-v",
    "5.5": "m23",
    "5.6": "psl2-16",
}


def _emit(session: Session, caps: Caps, name: str, **extra: Any) -> None:
    results: Dict[str, Any] = {"example": name, **extra}
    results.update(run_example(name, caps))
    session.emit(results)


@click.command("example")
@click.argument("name", type=click.Choice(sorted(EXAMPLES)))
@common_options
def example(name: str, session: Session, caps: Caps) -> None:
    """运行一个内置算例"""
    _emit(session, caps, name)


@click.command("paper-example")
@click.argument("number", type=click.Choice(sorted(EXAMPLE_NUMBERS)))
@common_options
def numbered_example(number: str, session: Session, caps: Caps) -> None:
    """按编号运行内置算例"""
    _emit(session, caps, EXAMPLE_NUMBERS[number], number=number)


def register(cli: click.Group) -> None:
    cli.add_command(example)
    cli.add_command(numbered_example)
