"""
分支枚举与拼接
"""
from typing import Optional, Sequence

import click

from hurwitz.cli.io import load_components, load_group, require_group, select_classes
from hurwitz.cli.options import (
    classes_option,
    common_options,
    components_input,
    group_option,
)
from hurwitz.cli.session import Session
from hurwitz.core.exceptions import InputError
from hurwitz.schemas.caps import Caps
from hurwitz.schemas.results import component_summary, multidiscriminant_summary
from hurwitz.services.braidcore import (
    ComponentIndex,
    concat_all,
    enumerate_components,
    multidiscriminant,
)


@click.command("components")
@group_option
@classes_option
@click.option(
    "--degree", type=click.IntRange(min=0), required=True, help="元组长度 n"
)
@click.option("--generating", is_flag=True, help="只保留生成 H 的分支")
@common_options
def components(
    group_file: Optional[str],
    classes_spec: str,
    degree: int,
    generating: bool,
    session: Session,
    caps: Caps,
) -> None:
    """枚举 c 中元素组成的 n 元积一元组的全部分支"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    found = enumerate_components(subset, degree, caps, require_generating=generating)
    records = []
    for x in found:
        record = component_summary(x)
        record["multidiscriminant"] = multidiscriminant_summary(
            multidiscriminant(x.canonical, subset), subset
        )
        records.append(record)
    session.emit({"degree": degree, "count": len(found), "components": records})


@click.command("concat")
@group_option
@components_input
@common_options
def concat(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    """按给出顺序拼接各分支"""
    group = load_group(group_file, session) if group_file else None
    index = ComponentIndex()
    factors = load_components(component_files, tuple_texts, group, session, caps)
    if not factors:
        raise InputError("concat requires at least one --component or --tuple")
    product = concat_all(factors[0].points, factors, caps, index)
    session.emit(
        {
            "factors": [component_summary(x) for x in factors],
            "product": component_summary(product),
        }
    )


def register(cli: click.Group) -> None:
    cli.add_command(components)
    cli.add_command(concat)
