"""
可复现的算例

每个算例返回可直接写入报告的结果字典。
"""
import math
from typing import Any, Callable, Dict, List

import structlog

from hurwitz.core.exceptions import UnknownExample
from hurwitz.schemas.caps import Caps
from hurwitz.services.braidcore import (
    ClassSubset,
    GTuple,
    component_of,
    enumerate_components,
    multidiscriminant,
)
from hurwitz.services.galois import (
    is_defined_over_abelian,
    is_rational_multidiscriminant,
    make_context,
    rational_branch_point_count,
)
from hurwitz.services.monoid import build_v, is_complete_class_set
from hurwitz.services.permcore import (
    Permutation,
    are_conjugate,
    build_group,
    inverse,
    parse_cycles,
)

logger = structlog.get_logger(__name__)

M23_A = "(1, 22, 14)(2, 13, 9)(3, 8, 6)(7, 16, 21)(10, 18, 19)(11, 23, 12)"
M23_B = "(2, 4, 16)(3, 5, 7)(6, 11, 12)(8, 9, 14)(10, 21, 20)(15, 18, 17)"
PSL2_16_A = "(1, 11, 5, 13, 14, 17)(3, 15, 7, 12, 8, 6)(9, 10, 16)"
PSL2_16_B = "(1, 2, 15, 12, 8, 5)(3, 14, 11, 4, 9, 6)(7, 10, 17)"


def _two_generator_report(a_text: str, b_text: str, degree: int, caps: Caps) -> Dict[str, Any]:
    a = parse_cycles(a_text, degree)
    b = parse_cycles(b_text, degree)
    group = build_group([a, b])
    reversed_base = build_group([a, b], base_order=list(range(degree, 0, -1)))
    return {
        "degree": degree,
        "order": group.order,
        "order_second_base": reversed_base.order,
        "transitive": group.is_transitive(),
        "generator_orders": [a.order, b.order],
        "conjugate": are_conjugate(group, a, b, caps.max_nodes),
        "rational_branch_points": rational_branch_point_count([a, b]),
    }


def m23_example(caps: Caps) -> Dict[str, Any]:
    """两个 3 阶生成元，23 点上的传递群"""
    return _two_generator_report(M23_A, M23_B, 23, caps)


def psl2_16_example(caps: Caps) -> Dict[str, Any]:
    """两个 6 阶生成元，17 点"""
    return _two_generator_report(PSL2_16_A, PSL2_16_B, 17, caps)


def cyclic_generator(n: int) -> Permutation:
    return Permutation([(i + 1) % n for i in range(n)])


def cyclic_rationality_example(caps: Caps) -> Dict[str, Any]:
    """(1,1,1) 于 Z/3 以及 (1,-1) 于 Z/n 在 Q 上的定义性"""
    r3 = cyclic_generator(3)
    triple = component_of(GTuple(3, (r3, r3, r3)), caps)
    rows: List[Dict[str, Any]] = []
    for n in range(2, 13):
        r = cyclic_generator(n)
        x = component_of(GTuple(n, (r, inverse(r))), caps)
        rows.append({"n": n, "defined_over_q": is_defined_over_abelian(x, make_context(n), caps)})
    return {
        "triple_z3_defined_over_q": is_defined_over_abelian(triple, make_context(3), caps),
        "pair_table": rows,
        "defined_for": [row["n"] for row in rows if row["defined_over_q"]],
    }


def transposition_rationality_example(
    caps: Caps, max_degree: Dict[int, int] | None = None
) -> Dict[str, Any]:
    """
    S_d 的对换分支：同单值群同多重判别式者辫等价，且多重判别式 Q-有理

    max_degree 为 {d: 最大元组长度}，缺省 {3: 10, 4: 6}。
    多重判别式取关于各分支自身单值群 H 的共轭类。
    """
    limits = max_degree or {3: 10, 4: 6}
    rows = []
    for d, top in sorted(limits.items()):
        transpositions = [
            Permutation([j if p == i else i if p == j else p for p in range(d)])
            for i in range(d)
            for j in range(i + 1, d)
        ]
        group = build_group(transpositions)
        subset = ClassSubset(group, transpositions, caps)
        ctx = make_context(math.lcm(*range(1, d + 1)))
        for n in range(2, top + 1, 2):
            components = enumerate_components(subset, n, caps)
            buckets: Dict[Any, int] = {}
            rational = True
            for x in components:
                local = ClassSubset.from_classes(x.monodromy, list(x.entries), caps)
                key = (
                    frozenset(x.monodromy.elements(caps.max_elements)),
                    multidiscriminant(x.canonical, local),
                )
                buckets[key] = buckets.get(key, 0) + 1
                rational = rational and is_rational_multidiscriminant(x, subset, ctx)
            rows.append(
                {
                    "symmetric_degree": d,
                    "tuple_degree": n,
                    "components": len(components),
                    "determined_by_group_and_multidiscriminant": all(
                        count == 1 for count in buckets.values()
                    ),
                    "multidiscriminants_rational": rational,
                }
            )
    return {"rows": rows}


def complete_v_example(caps: Caps) -> Dict[str, Any]:
    """c = G ∖ {1} 时的 V 分支"""
    rows = []
    groups = {
        "Z/3": build_group([cyclic_generator(3)]),
        "V4": build_group(
            [Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])]
        ),
    }
    for name, group in groups.items():
        nonidentity = [g for g in group.elements(caps.max_elements) if not g.is_identity]
        subset = ClassSubset(group, nonidentity, caps)
        v = build_v(subset, caps)
        ctx = make_context(math.lcm(*(g.order for g in nonidentity)))
        rows.append(
            {
                "group": name,
                "complete": is_complete_class_set(subset, caps),
                "degree": v.degree,
                "orbit_size": v.orbit_size,
                "monodromy_is_group": v.monodromy.same_group(group),
                "defined_over_q": is_defined_over_abelian(v, ctx, caps),
            }
        )
    return {"rows": rows}


EXAMPLES: Dict[str, Callable[[Caps], Dict[str, Any]]] = {
    "m23": m23_example,
    "psl2-16": psl2_16_example,
    "cyclic-rationality": cyclic_rationality_example,
    "transposition-rationality": transposition_rationality_example,
    "complete-v": complete_v_example,
}


def run_example(name: str, caps: Caps) -> Dict[str, Any]:
    runner = EXAMPLES.get(name)
    if runner is None:
        raise UnknownExample(f"Unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    logger.info("运行算例", example=name)
    return runner(caps)
