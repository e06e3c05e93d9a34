"""
提升不变量

U(H, c) = ⟨[g], g ∈ c | [g][h][g]^{-1} = [ghg^{-1}]⟩
S_c := U(H, c) / ⟨[g]^{ord(g)}⟩，用陪集枚举得到其正则表示。
不变量 Π(g) = ([g_1]⋯[g_n] ∈ S_c, μ_{H,c}(g))。
"""
import hashlib
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from hurwitz.core.exceptions import (
    CDoesNotGenerate,
    CoverMismatch,
    InputError,
    NotAUnit,
    PowerLeavesC,
)
from hurwitz.schemas.caps import Caps
from hurwitz.services.braidcore import (
    ClassSubset,
    Component,
    GTuple,
    Multidiscriminant,
    enumerate_components,
    multidiscriminant,
)
from hurwitz.services.coset import CosetTable, coset_enumerate
from hurwitz.services.galois import act_multidiscriminant
from hurwitz.services.permcore import (
    Permutation,
    PermutationGroup,
    build_group,
    compose,
    conjugate,
    derived_subgroup,
    inverse,
    power,
)

logger = structlog.get_logger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    """生成元 [g]（g ∈ c，按元素序编号，从 1 开始）与关系子"""

    generator_labels: Tuple[Permutation, ...]
    conjugation_relators: Tuple[Word, ...]
    power_relators: Tuple[Word, ...] = ()

    @property
    def relators(self) -> Tuple[Word, ...]:
        return self.conjugation_relators + self.power_relators

    @cached_property
    def _index(self) -> Dict[Permutation, int]:
        return {g: i + 1 for i, g in enumerate(self.generator_labels)}

    def generator_index(self, g: Permutation) -> int:
        return self._index[g]


def build_presentation(subset: ClassSubset, with_power_relators: bool = True) -> Presentation:
    labels = subset.elements
    if not build_group(labels, degree=subset.group.degree).same_group(subset.group):
        raise CDoesNotGenerate("c does not generate H")
    index = {g: i + 1 for i, g in enumerate(labels)}

    conjugation = []
    for g in labels:
        for h in labels:
            ghg = conjugate(h, g)
            conjugation.append((index[g], index[h], -index[g], -index[ghg]))
    powers = []
    if with_power_relators:
        powers = [(index[g],) * g.order for g in labels]
    return Presentation(labels, tuple(conjugation), tuple(powers))


def enumerate_presentation(presentation: Presentation, max_cosets: int) -> CosetTable:
    return coset_enumerate(
        len(presentation.generator_labels), presentation.relators, max_cosets
    )


class SchurCover:
    """
    S_c 的正则表示：陪集 0 为单位元，table[a][2(i-1)] 为 a·[g_i]

    每个元素记一个生成树上的列序列（从单位元出发的字），乘法沿字追踪。
    """

    def __init__(self, subset: ClassSubset, presentation: Presentation, table: CosetTable):
        self.subset = subset
        self.presentation = presentation
        self.table: List[List[int]] = table.table  # type: ignore[assignment]
        self.size = len(self.table)
        self.projection = presentation.generator_labels
        self.kernel_order = self.size // subset.group.order
        self._words, self._images = self._spanning_tree()

        digest = hashlib.sha256()
        for g in presentation.generator_labels:
            digest.update(repr(g.images).encode())
        for row in self.table:
            digest.update(repr(row).encode())
        self.fingerprint = digest.hexdigest()

    def _column_image(self, column: int) -> Permutation:
        g = self.projection[column // 2]
        return g if column % 2 == 0 else inverse(g)

    def _spanning_tree(self) -> Tuple[List[Word], List[Permutation]]:
        words: List[Optional[Word]] = [None] * self.size
        images: List[Optional[Permutation]] = [None] * self.size
        words[0] = ()
        images[0] = self.subset.group.identity
        queue = deque([0])
        while queue:
            a = queue.popleft()
            for column, b in enumerate(self.table[a]):
                if words[b] is None:
                    words[b] = words[a] + (column,)  # type: ignore[operator]
                    step = self._column_image(column)
                    images[b] = compose(images[a], step)  # type: ignore[arg-type]
                    queue.append(b)
        return words, images  # type: ignore[return-value]

    identity = 0

    def lift(self, g: Permutation) -> int:
        """[g] 在 S_c 中的像"""
        return self.table[0][2 * (self.presentation.generator_index(g) - 1)]

    def trace(self, start: int, columns: Sequence[int]) -> int:
        a = start
        for column in columns:
            a = self.table[a][column]
        return a

    def multiply(self, a: int, b: int) -> int:
        return self.trace(a, self._words[b])

    def inverse(self, a: int) -> int:
        return self.trace(0, [column ^ 1 for column in reversed(self._words[a])])

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inverse(a), -n
        result = 0
        for _ in range(n):
            result = self.multiply(result, a)
        return result

    def project(self, a: int) -> Permutation:
        """S_c → H"""
        return self._images[a]

    def element_order(self, a: int) -> int:
        n, b = 1, a
        while b != 0:
            b = self.multiply(b, a)
            n += 1
        return n

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in range(self.size)))

    def kernel(self) -> List[int]:
        return [a for a in range(self.size) if self.project(a).is_identity]

    def is_central(self, a: int) -> bool:
        return all(
            self.multiply(a, self.lift(g)) == self.multiply(self.lift(g), a)
            for g in self.projection
        )


def build_schur_cover(subset: ClassSubset, caps: Caps) -> SchurCover:
    presentation = build_presentation(subset, with_power_relators=True)
    table = enumerate_presentation(presentation, caps.max_cosets)
    cover = SchurCover(subset, presentation, table)
    logger.info(
        "约化 Schur 覆盖构建完成",
        group_order=subset.group.order,
        generators=len(presentation.generator_labels),
        size=cover.size,
        kernel_order=cover.kernel_order,
    )
    return cover


@dataclass(frozen=True)
class LiftingInvariant:
    s_part: int
    psi: Multidiscriminant
    fingerprint: str = field(repr=False)


def lifting_invariant(t: GTuple, cover: SchurCover) -> LiftingInvariant:
    psi = multidiscriminant(t, cover.subset)
    columns = [2 * (cover.presentation.generator_index(g) - 1) for g in t.entries]
    return LiftingInvariant(cover.trace(0, columns), psi, cover.fingerprint)


def identity_invariant(cover: SchurCover) -> LiftingInvariant:
    return LiftingInvariant(0, Multidiscriminant.zero(cover.subset.class_ids), cover.fingerprint)


def _check_cover(v: LiftingInvariant, cover: SchurCover) -> None:
    if v.fingerprint != cover.fingerprint:
        raise CoverMismatch("Invariant was computed over a different cover")


def invariant_product(
    u: LiftingInvariant, v: LiftingInvariant, cover: SchurCover
) -> LiftingInvariant:
    if u.fingerprint != v.fingerprint:
        raise CoverMismatch("Invariants belong to different covers")
    _check_cover(u, cover)
    return LiftingInvariant(cover.multiply(u.s_part, v.s_part), u.psi + v.psi, cover.fingerprint)


class AbelianQuotient:
    """H^ab = H / [H, H]；陪集以其最小元素为代表"""

    def __init__(self, group: PermutationGroup, caps: Caps):
        self.group = group
        self.derived = derived_subgroup(group)
        self._derived_elements = self.derived.elements(caps.max_elements)
        self.order = group.order // self.derived.order

    def image(self, g: Permutation) -> Permutation:
        return min(compose(g, k) for k in self._derived_elements)


def tilde_pi(
    psi: Multidiscriminant, subset: ClassSubset, quotient: AbelianQuotient
) -> Permutation:
    """π̃(ψ) = ∏_γ γ̃^{ψ(γ)} ∈ H^ab"""
    product = subset.group.identity
    for class_id, count in psi.counts:
        product = compose(product, power(subset.representative(class_id), count))
    return quotient.image(product)


def is_coherent(v: LiftingInvariant, cover: SchurCover, quotient: AbelianQuotient) -> bool:
    """纤维积相容性：π̃(ψ) 等于 S_c 分量在 H^ab 中的像"""
    return quotient.image(cover.project(v.s_part)) == tilde_pi(v.psi, cover.subset, quotient)


def w_element(
    class_id: int, u: int, cover: SchurCover, representative: Optional[Permutation] = None
) -> int:
    """w(γ, u) = [g_γ]^{-u} · [g_γ^u]，与代表元 g_γ 的选取无关"""
    subset = cover.subset
    g = representative if representative is not None else subset.representative(class_id)
    if subset.table.element_to_class.get(g) != class_id:
        raise InputError(f"{g!r} does not lie in class {class_id}")
    g_u = power(g, u)
    if g_u not in subset:
        raise PowerLeavesC(f"{u}-th power of {g!r} leaves c")
    return cover.multiply(cover.power(cover.lift(g), -u), cover.lift(g_u))


def galois_act_invariant(v: LiftingInvariant, k: int, cover: SchurCover) -> LiftingInvariant:
    """
    σ.v = (h^u ∏_γ w(γ, u)^{ψ(γ)}, ψ ∘ p_k)，k = χ(σ)，u = k^{-1}

    u 取模 S_c 的指数（H 指数的倍数）的逆元。
    """
    _check_cover(v, cover)
    modulus = cover.exponent
    if math.gcd(k, modulus) != 1:
        raise NotAUnit(f"{k} is not a unit modulo {modulus}")
    u = pow(k, -1, modulus) if modulus > 1 else 1
    s = cover.power(v.s_part, u)
    for class_id, count in v.psi.counts:
        if count:
            s = cover.multiply(s, cover.power(w_element(class_id, u, cover), count))
    psi = act_multidiscriminant(v.psi, k, cover.subset)
    return LiftingInvariant(s, psi, cover.fingerprint)


def is_m_big(x: Component, m: int, subset: ClassSubset) -> bool:
    """出现的每个类至少出现 m 次"""
    psi = multidiscriminant(x.canonical, subset)
    return all(n >= m for _, n in psi.counts if n > 0)


@dataclass(frozen=True)
class MBigEstimate:
    m_est: Optional[int]
    stabilized: bool
    max_observed: int
    considered: int


def estimate_m_big(subset: ClassSubset, degree_cap: int, caps: Caps) -> MBigEstimate:
    """
    经验估计 M_{H,c}：最小的 M，使得生成 H、c_H(g) = c、min(μ) ≥ M 的已枚举分支上
    (μ, 提升不变量) 是单射
    """
    cover = build_schur_cover(subset, caps)
    pool: List[Tuple[Component, LiftingInvariant]] = []
    for n in range(1, degree_cap + 1):
        for x in enumerate_components(subset, n, caps, require_generating=True):
            v = lifting_invariant(x.canonical, cover)
            if v.psi.minimum() >= 1:
                pool.append((x, v))
    if not pool:
        return MBigEstimate(m_est=0, stabilized=True, max_observed=0, considered=0)

    max_observed = max(v.psi.minimum() for _, v in pool)
    for m in range(1, max_observed + 1):
        seen: Dict[LiftingInvariant, Component] = {}
        injective = True
        for x, v in pool:
            if v.psi.minimum() < m:
                continue
            if v in seen and seen[v] != x:
                injective = False
                break
            seen[v] = x
        if injective:
            logger.info("M 估计", m_est=m, considered=len(pool))
            return MBigEstimate(
                m_est=m,
                stabilized=True,
                max_observed=max_observed,
                considered=len(pool),
            )
    logger.warning("单射性在枚举范围内未稳定", degree_cap=degree_cap)
    return MBigEstimate(
        m_est=None, stabilized=False, max_observed=max_observed, considered=len(pool)
    )
