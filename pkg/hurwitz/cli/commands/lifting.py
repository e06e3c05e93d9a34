"""
约化 Schur 覆盖与提升不变量命令
"""
from typing import Optional, Sequence

import click

from hurwitz.cli.io import load_tuples, require_group, select_classes
from hurwitz.cli.options import classes_option, common_options, group_option
from hurwitz.cli.session import Session
from hurwitz.core.exceptions import InputError
from hurwitz.schemas.caps import Caps
from hurwitz.schemas.results import CoverSummary, InvariantSummary
from hurwitz.services.lifting import (
    AbelianQuotient,
    SchurCover,
    build_presentation,
    build_schur_cover,
    enumerate_presentation,
    estimate_m_big,
    galois_act_invariant,
    is_coherent,
    lifting_invariant,
)

tuple_option = click.option(
    "--tuple",
    "tuple_texts",
    multiple=True,
    required=True,
    help='c 中元素组成的元组，如 "(1, 2); (1, 2)"（可重复）',
)


@click.command("schur-cover")
@group_option
@classes_option
@common_options
def schur_cover(
    group_file: Optional[str], classes_spec: str, session: Session, caps: Caps
) -> None:
    """S_c 的阶、核的阶与生成元投影"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    presentation = build_presentation(subset)
    table = enumerate_presentation(presentation, caps.max_cosets)
    consistent = table.is_consistent()
    cover = SchurCover(subset, presentation, table)
    session.emit(CoverSummary.from_cover(cover, consistent).model_dump())


@click.command("invariant")
@group_option
@classes_option
@tuple_option
@common_options
def invariant(
    group_file: Optional[str],
    classes_spec: str,
    tuple_texts: Sequence[str],
    session: Session,
    caps: Caps,
) -> None:
    """Π(g) = ([g_1]⋯[g_n], μ(g))；元组不要求积为 1"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    cover = build_schur_cover(subset, caps)
    quotient = AbelianQuotient(group, caps)
    records = []
    for t in load_tuples(tuple_texts, group):
        v = lifting_invariant(t, cover)
        record = InvariantSummary.from_invariant(v, cover).model_dump()
        record["coherent"] = is_coherent(v, cover, quotient)
        records.append(record)
    session.emit({"cover_size": cover.size, "invariants": records})


@click.command("act-invariant")
@group_option
@classes_option
@tuple_option
@click.option("--unit", "k", type=int, required=True, help="k = χ(σ)")
@common_options
def act_invariant(
    group_file: Optional[str],
    classes_spec: str,
    tuple_texts: Sequence[str],
    k: int,
    session: Session,
    caps: Caps,
) -> None:
    """σ.Π(g)，u = k^{-1} 模 S_c 的指数"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    cover = build_schur_cover(subset, caps)
    records = []
    for t in load_tuples(tuple_texts, group):
        v = lifting_invariant(t, cover)
        records.append(
            {
                "invariant": InvariantSummary.from_invariant(v, cover).model_dump(),
                "acted": InvariantSummary.from_invariant(
                    galois_act_invariant(v, k, cover), cover
                ).model_dump(),
            }
        )
    session.emit({"unit": k, "cover_exponent": cover.exponent, "results": records})


@click.command("estimate-mbig")
@group_option
@classes_option
@click.option(
    "--degree", type=click.IntRange(min=1), required=True, help="枚举的最大元组长度"
)
@common_options
def estimate_mbig(
    group_file: Optional[str],
    classes_spec: str,
    degree: int,
    session: Session,
    caps: Caps,
) -> None:
    """经验估计使 (μ, 提升不变量) 成为单射的最小 M"""
    group = require_group(group_file, session)
    subset = select_classes(classes_spec, group, caps)
    if not subset.elements:
        raise InputError("c is empty")
    estimate = estimate_m_big(subset, degree, caps)
    session.emit(
        {
            "degree_cap": degree,
            "m_est": estimate.m_est,
            "stabilized": estimate.stabilized,
            "max_observed": estimate.max_observed,
            "considered": estimate.considered,
        }
    )


def register(cli: click.Group) -> None:
    for command in (schur_cover, invariant, act_invariant, estimate_mbig):
        cli.add_command(command)
