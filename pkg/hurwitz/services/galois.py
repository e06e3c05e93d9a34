"""
Galois 作用的分圆模型

Γ_K 只通过分圆特征 χ 在 (Z/N)^× 中的像出现：σ 与单位 k = χ(σ) mod N 等同。
- 类上的作用：p_k(γ) = γ^k 所在的类
- 多重判别式：ψ ↦ ψ ∘ p_k
- 交换分支：逐项取 k^{-1} 次幂
"""
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import structlog

from hurwitz.core.exceptions import (
    InputError,
    NotAbelian,
    NotAUnit,
    NotAUnitSubgroup,
    PowerLeavesC,
)
from hurwitz.schemas.caps import Caps
from hurwitz.services.braidcore import (
    ClassSubset,
    Component,
    ComponentIndex,
    GTuple,
    Multidiscriminant,
    component_of,
    concat_all,
    enumerate_components,
    multidiscriminant,
)
from hurwitz.services.permcore import Permutation, PermutationGroup, power

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class RationalityContext:
    """Im(χ) 在 (Z/N)^× 中的像"""

    modulus: int
    units: Tuple[int, ...]

    def __contains__(self, k: int) -> bool:
        return self.normalize(k) in self.units

    def normalize(self, k: int) -> int:
        return k % self.modulus if self.modulus > 1 else 1


def make_context(
    modulus: int, mode: str = "full", units: Optional[Iterable[int]] = None
) -> RationalityContext:
    """
    构造有理性上下文

    Args:
        modulus: N（通常取群的指数）
        mode: full（K = Q）、trivial（K 含全部 N 次单位根）或 explicit
        units: explicit 模式下的单位列表，须构成 (Z/N)^× 的子群
    """
    if modulus <= 0:
        raise InputError("Modulus must be positive")
    if modulus == 1:
        return RationalityContext(1, (1,))
    if mode == "full":
        return RationalityContext(
            modulus, tuple(k for k in range(1, modulus) if math.gcd(k, modulus) == 1)
        )
    if mode == "trivial":
        return RationalityContext(modulus, (1,))
    if mode != "explicit" or units is None:
        raise InputError(f"Unknown context mode {mode!r}")

    residues = sorted({k % modulus for k in units})
    for k in residues:
        if math.gcd(k, modulus) != 1:
            raise NotAUnitSubgroup(f"{k} is not a unit modulo {modulus}")
    if 1 not in residues:
        raise NotAUnitSubgroup("Unit subgroup must contain 1")
    members = set(residues)
    for a in residues:
        for b in residues:
            if (a * b) % modulus not in members:
                raise NotAUnitSubgroup(
                    f"Units {residues} not closed under multiplication modulo {modulus}"
                )
    return RationalityContext(modulus, tuple(residues))


def is_rational_subset(c: Iterable[Permutation], ctx: RationalityContext) -> bool:
    """对所有 g ∈ c 与 k ∈ Im(χ)，g^k ∈ c"""
    members = set(c)
    return all(power(g, k) in members for g in members for k in ctx.units)


def rational_closure(
    group: PermutationGroup, elements: Iterable[Permutation], caps: Caps
) -> ClassSubset:
    """包含给定元素的最小 Q-有理子集（共轭类之并，且对与阶互素的幂封闭）"""
    reps = set()
    for g in elements:
        n = g.order
        reps.update(power(g, j) for j in range(1, n + 1) if math.gcd(j, n) == 1)
    return ClassSubset.from_classes(group, sorted(reps), caps)


def class_power_map(subset: ClassSubset, k: int) -> Dict[int, int]:
    """p_k：D 上的类置换"""
    mapping: Dict[int, int] = {}
    table = subset.table
    for class_id in subset.class_ids:
        images = set()
        for g in table.classes[class_id].elements:
            gk = power(g, k)
            if gk not in subset:
                raise PowerLeavesC(f"{k}-th power of {g!r} leaves c")
            images.add(table.class_of(gk))
        if len(images) != 1:
            raise AssertionError("power map not constant on a conjugacy class")
        mapping[class_id] = images.pop()
    return mapping


def act_multidiscriminant(
    psi: Multidiscriminant, k: int, subset: ClassSubset
) -> Multidiscriminant:
    """ψ ↦ ψ ∘ p_k"""
    p_k = class_power_map(subset, k)
    counts = psi.as_dict()
    return Multidiscriminant(tuple((cid, counts[p_k[cid]]) for cid in psi.class_ids))


def is_rational_multidiscriminant(
    x: Component, subset: ClassSubset, ctx: RationalityContext
) -> bool:
    psi = multidiscriminant(x.canonical, subset)
    return all(act_multidiscriminant(psi, k, subset) == psi for k in ctx.units)


def _abelian_exponent(x: Component) -> int:
    if not x.monodromy.is_abelian():
        raise NotAbelian("Monodromy group of the component is not abelian")
    return math.lcm(1, *(g.order for g in x.entries))


def abelian_action(
    x: Component, k: int, caps: Caps, index: Optional[ComponentIndex] = None
) -> Component:
    """σ.x，k = χ(σ)：交换单值群时逐项取 k^{-1} 次幂"""
    exponent = _abelian_exponent(x)
    if math.gcd(k, exponent) != 1:
        raise NotAUnit(f"{k} is not a unit modulo {exponent}")
    u = pow(k, -1, exponent) if exponent > 1 else 1
    acted = GTuple(x.points, tuple(power(g, u) for g in x.entries))
    return component_of(acted, caps, index)


def is_defined_over_abelian(x: Component, ctx: RationalityContext, caps: Caps) -> bool:
    index = ComponentIndex()
    return all(abelian_action(x, k, caps, index) == x for k in ctx.units)


def galois_norm_abelian(x: Component, ctx: RationalityContext, caps: Caps) -> Component:
    """N_K(x)：Galois 轨道中各不同分支的乘积"""
    index = ComponentIndex()
    orbit = sorted({abelian_action(x, k, caps, index) for k in ctx.units})
    logger.debug("Galois 轨道", degree=x.degree, orbit=len(orbit))
    return concat_all(x.points, orbit, caps)


@dataclass(frozen=True)
class Determined:
    component: Component


@dataclass(frozen=True)
class Ambiguous:
    candidates: Tuple[Component, ...]


Resolution = Union[Determined, Ambiguous]


def resolve_action(
    x: Component, k: int, caps: Caps, subset: Optional[ClassSubset] = None
) -> Resolution:
    """
    用多重判别式与提升不变量确定 σ.x

    候选为同次数、同单值群、且 (μ, 提升不变量) 等于作用后目标值的分支。
    subset 缺省时取 (⟨x⟩, 包含 x 各项的最小有理子集)。
    """
    from hurwitz.services.lifting import (
        build_schur_cover,
        galois_act_invariant,
        lifting_invariant,
    )

    if subset is None:
        subset = rational_closure(x.monodromy, x.entries, caps)
    cover = build_schur_cover(subset, caps)
    target = galois_act_invariant(lifting_invariant(x.canonical, cover), k, cover)
    monodromy = x.monodromy
    candidates = tuple(
        y
        for y in enumerate_components(subset, x.degree, caps)
        if y.monodromy.same_group(monodromy) and lifting_invariant(y.canonical, cover) == target
    )
    logger.info("作用判定", degree=x.degree, unit=k, candidates=len(candidates))
    if len(candidates) == 1:
        return Determined(candidates[0])
    return Ambiguous(candidates)


def cyclotomic_block(g: Permutation) -> GTuple:
    """(g^k : k 为模 ord(g) 的单位)；对合取 (g, g)，单位元取空元组"""
    n = g.order
    if n == 1:
        return GTuple(g.degree)
    if n == 2:
        return GTuple(g.degree, (g, g))
    return GTuple(
        g.degree, tuple(power(g, k) for k in range(1, n) if math.gcd(k, n) == 1)
    )


def rational_branch_point_count(generators: Sequence[Permutation]) -> int:
    """2·m(2) + Σ_{i≥3} φ(i)·m(i)，即各生成元分圆块的总长度"""
    return sum(cyclotomic_block(g).degree for g in generators)


def rational_components(
    components: Iterable[Component], ctx: RationalityContext, caps: Caps
) -> List[Component]:
    """筛选多重判别式（关于各自单值群与有理闭包）为 K-有理的分支"""
    kept = []
    for z in components:
        subset = rational_closure(z.monodromy, z.entries, caps)
        if is_rational_multidiscriminant(z, subset, ctx):
            kept.append(z)
    return kept
