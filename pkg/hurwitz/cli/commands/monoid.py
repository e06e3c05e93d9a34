"""
分支幺半群命令：ni、ni♮、可置换判据、单元素验证、分解、界与 V 分支
"""
from typing import Any, Dict, List, Optional, Sequence, Tuple

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
from hurwitz.schemas.results import component_summary
from hurwitz.services.braidcore import Component
from hurwitz.services.monoid import (
    MonoidService,
    build_v,
    is_complete_class_set,
    reduction_bounds,
)
from hurwitz.services.permcore import (
    PermutationGroup,
    format_cycles,
    join,
    order_statistics,
)


def _factors(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
    minimum: int = 1,
) -> Tuple[Optional[PermutationGroup], List[Component]]:
    group = load_group(group_file, session) if group_file else None
    factors = load_components(component_files, tuple_texts, group, session, caps)
    if len(factors) < minimum:
        raise InputError(f"At least {minimum} components are required")
    return group, factors


def _ni(
    sharp: bool,
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    group, factors = _factors(group_file, component_files, tuple_texts, session, caps)
    service = MonoidService(caps)
    query = service.query(factors, group=group, sharp=sharp)
    found = service.ni_set(query)
    session.emit(
        {
            "h_order": query.group.order,
            "sharp": sharp,
            "count": len(found),
            "components": [component_summary(z) for z in found],
        }
    )


@click.command("ni")
@group_option
@components_input
@common_options
def ni(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    """ni_H(x_1, …, x_n)；--group 缺省取各因子单值群生成的群"""
    _ni(False, group_file, component_files, tuple_texts, session, caps)


@click.command("ni-sharp")
@group_option
@components_input
@common_options
def ni_sharp(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    """ni♮_H：只保留单值群不变的乘积"""
    _ni(True, group_file, component_files, tuple_texts, session, caps)


@click.command("permuting")
@group_option
@components_input
@common_options
def permuting(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    """两个分支时检验 H_1 H_2 = ⟨H_1, H_2⟩，更多时检验可置换族"""
    _, factors = _factors(
        group_file, component_files, tuple_texts, session, caps, minimum=2
    )
    service = MonoidService(caps)
    if len(factors) == 2:
        holds = service.are_permuting(factors[0], factors[1])
        kind = "pair"
    else:
        holds = service.is_permuting_family(factors)
        kind = "family"
    session.emit(
        {
            "kind": kind,
            "monodromy_orders": [x.monodromy.order for x in factors],
            "joined_order": join(*(x.monodromy for x in factors)).order,
            "permuting": holds,
        }
    )


@click.command("verify-singleton")
@group_option
@components_input
@common_options
def verify_singleton(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    """ni♮(x_1, …, x_n) 是否恰为 {x_1⋯x_n}"""
    group, factors = _factors(group_file, component_files, tuple_texts, session, caps)
    service = MonoidService(caps)
    verdict = service.verify_singleton(service.query(factors, group=group))
    session.emit(
        {
            "holds": verdict.holds,
            "product": component_summary(verdict.product),
            "witness": [component_summary(z) for z in verdict.witness],
        }
    )


@click.command("factor")
@group_option
@components_input
@click.option(
    "--psi",
    type=click.IntRange(min=0),
    default=None,
    help="剩余部分的次数上限，缺省为 ψ(⟨x⟩)",
)
@common_options
def factor(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    psi: Optional[int],
    session: Session,
    caps: Caps,
) -> None:
    """x = (g, …, g) ⋯ (h, …, h) · y，deg y ≤ ψ"""
    _, factors = _factors(group_file, component_files, tuple_texts, session, caps)
    if len(factors) != 1:
        raise InputError("factor takes exactly one component")
    x = factors[0]
    if psi is None:
        _, psi = order_statistics(x.monodromy, caps.max_elements)
    service = MonoidService(caps)
    result = service.factor_small(x, psi)
    session.emit(
        {
            "psi": psi,
            "prefix": [
                {"element": format_cycles(g), "count": n} for g, n in result.prefix
            ],
            "remainder": component_summary(result.remainder),
            "reconstitutes": service.reconstitute(result) == x,
        }
    )


@click.command("bounds")
@group_option
@classes_option
@common_options
def bounds(
    group_file: Optional[str], classes_spec: str, session: Session, caps: Caps
) -> None:
    """约化界：粗界 2|c|ψ(H) 与细界"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    exponent, psi = order_statistics(group, caps.max_elements)
    coarse, refined = reduction_bounds(subset, caps)
    session.emit(
        {
            "exponent": exponent,
            "psi": psi,
            "c_size": len(subset.elements),
            "coarse": coarse,
            "refined": refined,
        }
    )


@click.command("build-v")
@group_option
@classes_option
@common_options
def build_v_cmd(
    group_file: Optional[str], classes_spec: str, session: Session, caps: Caps
) -> None:
    """V = ∏_{g ∈ c} (g, …, g)"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    v = build_v(subset, caps)
    results: Dict[str, Any] = component_summary(v)
    results["monodromy_is_group"] = v.monodromy.same_group(group)
    session.emit(results)


@click.command("complete-check")
@group_option
@classes_option
@common_options
def complete_check(
    group_file: Optional[str], classes_spec: str, session: Session, caps: Caps
) -> None:
    """没有真子群与 c 中每个类都相交"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    session.emit(
        {
            "class_count": len(subset.class_ids),
            "complete": is_complete_class_set(subset, caps),
        }
    )


@click.command("rational-products")
@group_option
@components_input
@units_option
@modulus_option
@common_options
def rational_products(
    group_file: Optional[str],
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    units_spec: str,
    modulus: Optional[int],
    session: Session,
    caps: Caps,
) -> None:
    """ni♮(x, y) 中多重判别式 K-有理的分支"""
    _, factors = _factors(
        group_file, component_files, tuple_texts, session, caps, minimum=2
    )
    if len(factors) != 2:
        raise InputError("rational-products takes exactly two components")
    x, y = factors
    joined = join(x.monodromy, y.monodromy)
    if modulus is None:
        modulus = group_exponent(joined, caps)
    ctx = parse_units(units_spec, modulus)
    kept = MonoidService(caps).rational_products(x, y, ctx)
    session.emit(
        {
            "modulus": ctx.modulus,
            "units": list(ctx.units),
            "count": len(kept),
            "components": [component_summary(z) for z in kept],
        }
    )


def register(cli: click.Group) -> None:
    for command in (
        ni,
        ni_sharp,
        permuting,
        verify_singleton,
        factor,
        bounds,
        build_v_cmd,
        complete_check,
        rational_products,
    ):
        cli.add_command(command)
