"""
各命令共享的选项
"""
import functools
from typing import Any, Callable

import click

from hurwitz.cli.session import Session
from hurwitz.schemas.caps import Caps

_POSITIVE = click.IntRange(min=1)

_COMMON_OPTIONS = [
    click.option("--max-orbit", type=_POSITIVE, help="单个辫群轨道的元组上限"),
    click.option("--max-cosets", type=_POSITIVE, help="陪集枚举上限"),
    click.option("--max-elements", type=_POSITIVE, help="群元素枚举上限"),
    click.option("--max-nodes", type=_POSITIVE, help="共轭搜索节点上限"),
    click.option("--human", is_flag=True, help="以表格输出"),
    click.option("--timing", is_flag=True, help="报告中写入耗时"),
]


def common_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """追加资源上限与输出选项，并把生效的 Caps 作为 caps 参数传入"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        session = click.get_current_context().ensure_object(Session)
        session.human = kwargs.pop("human")
        session.timing = kwargs.pop("timing")
        session.caps = Caps.from_settings(
            max_orbit=kwargs.pop("max_orbit"),
            max_cosets=kwargs.pop("max_cosets"),
            max_elements=kwargs.pop("max_elements"),
            max_nodes=kwargs.pop("max_nodes"),
        )
        return func(*args, session=session, caps=session.caps, **kwargs)

    for option in reversed(_COMMON_OPTIONS):
        wrapper = option(wrapper)
    return wrapper


group_option = click.option(
    "--group",
    "--file",
    "group_file",
    type=click.Path(exists=True, dir_okay=False),
    help="群文件（JSON：degree, generators）",
)
classes_option = click.option(
    "--classes",
    "classes_spec",
    default="nonidentity",
    show_default=True,
    help="c：transpositions | involutions | nonidentity | all | 以分号分隔的类代表元",
)
units_option = click.option(
    "--units",
    "units_spec",
    default="full",
    show_default=True,
    help="Im(χ)：full | trivial | k1,k2,...",
)
modulus_option = click.option(
    "--modulus", type=click.IntRange(min=1), default=None, help="N，缺省取群的指数",
)
component_options = [
    click.option(
        "--component",
        "component_files",
        multiple=True,
        type=click.Path(exists=True, dir_okay=False),
        help="分支文件（可重复）",
    ),
    click.option(
        "--tuple",
        "tuple_texts",
        multiple=True,
        help='轮换记号元组，以分号分隔，如 "(1, 2); (1, 2)"；可重复，需 --group',
    ),
]


def components_input(func: Callable[..., Any]) -> Callable[..., Any]:
    for option in reversed(component_options):
        func = option(func)
    return func
