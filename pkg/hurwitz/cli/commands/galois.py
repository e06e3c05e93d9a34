"""
有理性与 Galois 作用命令
"""
import math
from typing import Any, Dict, Optional, Sequence

import click

from hurwitz.cli.io import (
    group_exponent,
    load_components,
    load_group,
    parse_units,
    require_group,
    select_classes,
)
from hurwitz.cli.options import (
    classes_option,
    common_options,
    components_input,
    group_option,
    modulus_option,
    units_option,
)
from hurwitz.cli.session import Session
from hurwitz.core.exceptions import InputError
from hurwitz.schemas.caps import Caps
from hurwitz.schemas.results import component_summary, multidiscriminant_summary
from hurwitz.services.braidcore import ClassSubset, Component, multidiscriminant
from hurwitz.services.galois import (
    Determined,
    abelian_action,
    act_multidiscriminant,
    galois_norm_abelian,
    is_defined_over_abelian,
    is_rational_subset,
    rational_branch_point_count,
    rational_closure,
    resolve_action,
)

unit_option = click.option("--unit", "k", type=int, required=True, help="k = χ(σ)")
subset_classes_option = click.option(
    "--classes",
    "classes_spec",
    default=None,
    help="与 --group 一起确定 (H, c)；缺省取单值群与各项的有理闭包",
)


def _single(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> Component:
    group = load_group(group_file, session) if group_file else None
    found = load_components(component_files, tuple_texts, group, session, caps)
    if len(found) != 1:
        raise InputError("This command takes exactly one component")
    return found[0]


def _entry_exponent(x: Component) -> int:
    return math.lcm(1, *(g.order for g in x.entries))


@click.command("rational-subset")
@group_option
@classes_option
@units_option
@modulus_option
@common_options
def rational_subset(
    group_file: Optional[str],
    classes_spec: str,
    units_spec: str,
    modulus: Optional[int],
    session: Session,
    caps: Caps,
) -> None:
    """c 是否对 Im(χ) 中的幂封闭"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    ctx = parse_units(units_spec, modulus or group_exponent(group, caps))
    session.emit(
        {
            "modulus": ctx.modulus,
            "units": list(ctx.units),
            "c_size": len(subset.elements),
            "rational": is_rational_subset(subset.elements, ctx),
        }
    )


@click.command("rational-multidisc")
@group_option
@components_input
@subset_classes_option
@units_option
@modulus_option
@common_options
def rational_multidisc(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    classes_spec: Optional[str],
    units_spec: str,
    modulus: Optional[int],
    session: Session,
    caps: Caps,
) -> None:
    """μ 在 Im(χ) 作用下是否不变"""
    x = _single(group_file, component_files, tuple_texts, session, caps)
    subset: ClassSubset
    if classes_spec is not None:
        group = require_group(group_file, session)
        subset = select_classes(classes_spec, group, caps)
    else:
        subset = rational_closure(x.monodromy, x.entries, caps)
    group = subset.group
    ctx = parse_units(units_spec, modulus or group_exponent(group, caps))
    psi = multidiscriminant(x.canonical, subset)
    acted = {k: act_multidiscriminant(psi, k, subset) for k in ctx.units}
    session.emit(
        {
            "modulus": ctx.modulus,
            "multidiscriminant": multidiscriminant_summary(psi, subset),
            "acted": {
                str(k): multidiscriminant_summary(phi, subset)
                for k, phi in acted.items()
            },
            "rational": all(phi == psi for phi in acted.values()),
        }
    )


@click.command("abelian-act")
@group_option
@components_input
@unit_option
@common_options
def abelian_act(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    k: int,
    session: Session,
    caps: Caps,
) -> None:
    """交换单值群的分支上 σ 的作用"""
    x = _single(group_file, component_files, tuple_texts, session, caps)
    acted = abelian_action(x, k, caps)
    session.emit(
        {
            "unit": k,
            "component": component_summary(x),
            "acted": component_summary(acted),
        }
    )


@click.command("abelian-defined")
@group_option
@components_input
@units_option
@modulus_option
@common_options
def abelian_defined(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    units_spec: str,
    modulus: Optional[int],
    session: Session,
    caps: Caps,
) -> None:
    x = _single(group_file, component_files, tuple_texts, session, caps)
    ctx = parse_units(units_spec, modulus or _entry_exponent(x))
    session.emit(
        {
            "modulus": ctx.modulus,
            "units": list(ctx.units),
            "defined": is_defined_over_abelian(x, ctx, caps),
        }
    )


@click.command("resolve-act")
@group_option
@components_input
@subset_classes_option
@unit_option
@common_options
def resolve_act(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    classes_spec: Optional[str],
    k: int,
    session: Session,
    caps: Caps,
) -> None:
    """用多重判别式与提升不变量确定 σ.x"""
    x = _single(group_file, component_files, tuple_texts, session, caps)
    subset = None
    if classes_spec is not None:
        subset = select_classes(classes_spec, require_group(group_file, session), caps)
    resolution = resolve_action(x, k, caps, subset=subset)
    results: Dict[str, Any] = {"unit": k}
    if isinstance(resolution, Determined):
        results["status"] = "determined"
        results["component"] = component_summary(resolution.component)
    else:
        results["status"] = "ambiguous"
        results["candidates"] = [component_summary(y) for y in resolution.candidates]
    session.emit(results)


@click.command("norm")
@group_option
@components_input
@units_option
@modulus_option
@common_options
def norm(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    units_spec: str,
    modulus: Optional[int],
    session: Session,
    caps: Caps,
) -> None:
    """N_K(x)：Galois 轨道上各分支之积"""
    x = _single(group_file, component_files, tuple_texts, session, caps)
    ctx = parse_units(units_spec, modulus or _entry_exponent(x))
    session.emit(
        {
            "modulus": ctx.modulus,
            "norm": component_summary(galois_norm_abelian(x, ctx, caps)),
        }
    )


@click.command("branch-count")
@group_option
@common_options
def branch_count(group_file: Optional[str], session: Session, caps: Caps) -> None:
    """以生成元的分圆块拼成的 Q-分支的次数"""
    group = require_group(group_file, session)
    session.emit(
        {
            "generator_orders": [g.order for g in group.generators],
            "rational_branch_points": rational_branch_point_count(group.generators),
        }
    )


def register(cli: click.Group) -> None:
    for command in (
        rational_subset,
        rational_multidisc,
        abelian_act,
        abelian_defined,
        resolve_act,
        norm,
        branch_count,
    ):
        cli.add_command(command)
