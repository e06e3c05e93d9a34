"""
group 命令组：群信息、共轭类、共轭判定、子群乘积
"""
from typing import Any, Dict, Optional

import click

from hurwitz.cli.io import load_group, parse_elements, require_group
from hurwitz.cli.options import common_options, group_option
from hurwitz.cli.session import Session
from hurwitz.core.exceptions import CapExceeded, InputError
from hurwitz.schemas.caps import Caps
from hurwitz.schemas.results import ClassSummary, GroupSummary
from hurwitz.services.permcore import (
    are_conjugate,
    build_group,
    conjugacy_classes,
    format_cycles,
    order_statistics,
    parse_cycles,
    subgroup_product_test,
)


@click.group("group")
def group_cmd() -> None:
    """置换群运算"""


@group_cmd.command("info")
@group_option
@common_options
def info(group_file: Optional[str], session: Session, caps: Caps) -> None:
    """阶、传递性、交换性，以及可枚举时的指数与 ψ"""
    group = require_group(group_file, session)
    results: Dict[str, Any] = GroupSummary.from_group(group).model_dump()
    reversed_base = build_group(
        group.generators,
        degree=group.degree,
        base_order=list(range(group.degree, 0, -1)),
    )
    results["order_second_base"] = reversed_base.order
    try:
        exponent, psi = order_statistics(group, caps.max_elements)
        results["exponent"] = exponent
        results["psi"] = psi
    except CapExceeded:
        results["exponent"] = None
        results["psi"] = None
    session.emit(results)


@group_cmd.command("classes")
@group_option
@common_options
def classes(group_file: Optional[str], session: Session, caps: Caps) -> None:
    group = require_group(group_file, session)
    table = conjugacy_classes(group, caps.max_elements)
    session.emit(
        {
            "order": group.order,
            "class_count": len(table),
            "classes": [c.model_dump() for c in ClassSummary.from_table(table)],
        }
    )


@group_cmd.command("conjugate")
@group_option
@click.option("--a", "a_text", required=True, help="轮换记号")
@click.option("--b", "b_text", required=True, help="轮换记号")
@common_options
def conjugate_cmd(
    group_file: Optional[str], a_text: str, b_text: str, session: Session, caps: Caps
) -> None:
    """不枚举整个群，用生成元搜索共轭轨道"""
    group = require_group(group_file, session)
    a = parse_cycles(a_text, group.degree)
    b = parse_cycles(b_text, group.degree)
    for g in (a, b):
        if not group.contains(g):
            raise InputError(f"{format_cycles(g)} is not in the group")
    session.emit(
        {
            "a": format_cycles(a),
            "b": format_cycles(b),
            "conjugate": are_conjugate(group, a, b, caps.max_nodes),
        }
    )


@group_cmd.command("contains")
@group_option
@click.option(
    "--element", "element_text", required=True, help="以分号分隔的轮换记号"
)
@common_options
def contains(
    group_file: Optional[str], element_text: str, session: Session, caps: Caps
) -> None:
    group = require_group(group_file, session)
    elements = parse_elements(element_text, group.degree)
    session.emit(
        {
            "order": group.order,
            "membership": {format_cycles(g): group.contains(g) for g in elements},
        }
    )


@group_cmd.command("product")
@group_option
@click.option(
    "--other",
    "other_file",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="第二个子群的群文件",
)
@common_options
def product(
    group_file: Optional[str], other_file: str, session: Session, caps: Caps
) -> None:
    """H1·H2 是否为群（可置换判据）"""
    h1 = require_group(group_file, session)
    h2 = load_group(other_file, session)
    joined, product_is_group = subgroup_product_test(h1, h2, caps.max_elements)
    session.emit(
        {
            "order_h1": h1.order,
            "order_h2": h2.order,
            "order_joined": joined.order,
            "product_is_group": product_is_group,
        }
    )


def register(cli: click.Group) -> None:
    cli.add_command(group_cmd)
