"""
分支幺半群层：ni / ni♮ 集合、可置换判据、单元素验证、分解与界
"""
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import structlog
from sympy import totient

from hurwitz.core.exceptions import CapExceeded, InputError
from hurwitz.schemas.caps import Caps
from hurwitz.services.braidcore import (
    ClassSubset,
    Component,
    ComponentIndex,
    GTuple,
    braid_move,
    component_of,
    concat_all,
    conjugate_component,
)
from hurwitz.services.galois import RationalityContext, rational_components
from hurwitz.services.permcore import (
    Permutation,
    PermutationGroup,
    build_group,
    conjugate,
    join,
    order_statistics,
    subgroup_product_test,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class NiQuery:
    group: PermutationGroup
    factors: Tuple[Component, ...]
    sharp: bool = False


@dataclass(frozen=True)
class SingletonVerdict:
    holds: bool
    product: Component
    witness: Tuple[Component, ...]


@dataclass(frozen=True)
class Factorization:
    prefix: Tuple[Tuple[Permutation, int], ...]
    remainder: Component


class MonoidService:
    """
    分支幺半群上的运算

    持有一个 ComponentIndex，同一服务实例内重复出现的元组不再重新做轨道搜索。
    """

    def __init__(self, caps: Caps):
        self.caps = caps
        self.index = ComponentIndex()

    def query(
        self,
        factors: Sequence[Component],
        group: Optional[PermutationGroup] = None,
        sharp: bool = False,
    ) -> NiQuery:
        """H 缺省取各因子单值群生成的群"""
        if not factors:
            raise InputError("At least one factor is required")
        if group is None:
            group = join(*(x.monodromy for x in factors))
        for x in factors:
            if not x.monodromy.is_subgroup_of(group):
                raise InputError("Factor monodromy group is not contained in H")
        return NiQuery(group, tuple(factors), sharp)

    def product(self, factors: Sequence[Component]) -> Component:
        return concat_all(factors[0].points, factors, self.caps, self.index)

    def conjugates(self, x: Component, group: PermutationGroup) -> List[Component]:
        """{x^γ : γ ∈ H}，去重后按典范序排列"""
        elements = group.elements(self.caps.max_elements)
        found = {conjugate_component(x, gamma, self.caps, self.index) for gamma in elements}
        return sorted(found)

    def ni_set(self, q: NiQuery) -> List[Component]:
        """ni_H(x_1, …, x_n)，sharp 时为 ni♮_H"""
        choices = [self.conjugates(x, q.group) for x in q.factors]
        results: Set[Component] = set()
        for combo in itertools.product(*choices):
            results.add(self.product(combo))

        if q.sharp:
            target = self.product(q.factors).monodromy
            results = {z for z in results if z.monodromy.same_group(target)}
        logger.debug("ni 集合", factors=len(q.factors), sharp=q.sharp, size=len(results))
        return sorted(results)

    def are_permuting(self, x: Component, y: Component) -> bool:
        _, holds = subgroup_product_test(x.monodromy, y.monodromy, self.caps.max_elements)
        return holds

    def _conjugate_subgroups(
        self, h: PermutationGroup, group: PermutationGroup
    ) -> List[PermutationGroup]:
        seen: Dict[FrozenSet[Permutation], PermutationGroup] = {}
        for gamma in group.elements(self.caps.max_elements):
            conj = build_group([conjugate(g, gamma) for g in h.generators], degree=h.degree)
            key = frozenset(conj.elements(self.caps.max_elements))
            seen.setdefault(key, conj)
        return [seen[key] for key in sorted(seen, key=lambda s: sorted(s))]

    def is_permuting_family(self, factors: Sequence[Component]) -> bool:
        """
        逐字检验定义中的量词：对每个 i ≥ 2 与 H_{i+1}, …, H_n 的各个共轭，
        若 ⟨H_1, …, H_i, H_{i+1}^γ, …⟩ = H 则 ⟨H_1, …, H_{i-1}, H_{i+1}^γ, …⟩·H_i = H
        """
        groups = [x.monodromy for x in factors]
        whole = join(*groups)
        cap = self.caps.max_elements
        conjugate_lists = [self._conjugate_subgroups(h, whole) for h in groups]
        for i in range(1, len(groups)):
            tails = conjugate_lists[i + 1:]
            for choice in itertools.product(*(range(len(c)) for c in tails)):
                others = list(groups[:i]) + [tails[j][idx] for j, idx in enumerate(choice)]
                rest = join(*others)
                if not join(rest, groups[i]).same_group(whole):
                    continue
                _, product_is_group = subgroup_product_test(rest, groups[i], cap)
                if not product_is_group:
                    return False
        return True

    def verify_singleton(self, q: NiQuery) -> SingletonVerdict:
        """ni♮ 是否恰为 {x_1⋯x_n}；否则返回整个集合作为见证"""
        sharp_query = NiQuery(q.group, q.factors, sharp=True)
        found = self.ni_set(sharp_query)
        product = self.product(q.factors)
        holds = found == [product]
        return SingletonVerdict(holds, product, () if holds else tuple(found))

    def factor_small(self, x: Component, psi: int) -> Factorization:
        """
        反复抽出长度 ord(g) 的常值块 (g, …, g)，其中 g 是出现至少 ord(g)+1 次的最小元素，
        直到剩余部分次数不超过 psi
        """
        entries = list(x.entries)
        prefix: List[Tuple[Permutation, int]] = []
        while len(entries) > psi:
            counts: Dict[Permutation, int] = {}
            for g in entries:
                counts[g] = counts.get(g, 0) + 1
            candidates = sorted(g for g, n in counts.items() if n >= g.order + 1)
            if not candidates:
                break
            g = candidates[0]
            t = GTuple(x.points, tuple(entries))
            for slot in range(g.order):
                position = next(
                    p for p in range(slot, t.degree) if t.entries[p] == g
                )
                while position > slot:
                    t = braid_move(t, position, inverse_flag=True)
                    position -= 1
            entries = list(t.entries[g.order:])
            prefix.append((g, g.order))
        remainder = component_of(GTuple(x.points, tuple(entries)), self.caps, self.index)
        return Factorization(tuple(prefix), remainder)

    def block(self, g: Permutation, count: int) -> Component:
        return component_of(GTuple(g.degree, (g,) * count), self.caps, self.index)

    def reconstitute(self, factorization: Factorization) -> Component:
        pieces = [self.block(g, n) for g, n in factorization.prefix]
        return self.product(pieces + [factorization.remainder])

    def rational_products(
        self, x: Component, y: Component, ctx: RationalityContext
    ) -> List[Component]:
        """ni♮(x, y) 中多重判别式为 K-有理的分支（存在定义在 K 上的粘合分支的必要条件）"""
        found = self.ni_set(self.query([x, y], sharp=True))
        return rational_components(found, ctx, self.caps)


def reduction_bounds(subset: ClassSubset, caps: Caps) -> Tuple[int, int]:
    """(2|c|ψ(H), Σ_γ |γ|[ord(γ)(|γ| + φ(ord γ)) - 1])"""
    _, psi = order_statistics(subset.group, caps.max_elements)
    coarse = 2 * len(subset.elements) * psi
    refined = 0
    for class_id in subset.class_ids:
        size = subset.class_size(class_id)
        order = subset.representative(class_id).order
        refined += size * (order * (size + int(totient(order))) - 1)
    return coarse, refined


def build_v_tuple(c: Sequence[Permutation], points: int) -> GTuple:
    """按给定顺序拼接每个 g ∈ c 的 ord(g) 个副本"""
    entries: List[Permutation] = []
    for g in c:
        entries.extend([g] * g.order)
    return GTuple(points, tuple(entries))


def build_v(
    subset: ClassSubset, caps: Caps, order: Optional[Sequence[Permutation]] = None
) -> Component:
    """V = ∏_{g ∈ c} (g, …, g)；order 缺省为元素序"""
    elements = list(order) if order is not None else list(subset.elements)
    if sorted(elements) != list(subset.elements):
        raise InputError("Construction order must list every element of c once")
    return component_of(build_v_tuple(elements, subset.group.degree), caps)


def subgroup_lattice(group: PermutationGroup, caps: Caps) -> List[FrozenSet[Permutation]]:
    """全部子群（元素集合）：循环子群出发，对两两生成取闭包直到不动点"""
    cap = caps.max_elements
    elements = group.elements(cap)
    subgroups: Set[FrozenSet[Permutation]] = set()
    generators: Dict[FrozenSet[Permutation], Tuple[Permutation, ...]] = {}
    for g in elements:
        cyclic = build_group([g], degree=group.degree)
        key = frozenset(cyclic.elements(cap))
        if key not in subgroups:
            subgroups.add(key)
            generators[key] = (g,)

    frontier = list(subgroups)
    while frontier:
        new = []
        current = list(subgroups)
        for a in frontier:
            for b in current:
                if a <= b or b <= a:
                    continue
                joined = build_group(generators[a] + generators[b], degree=group.degree)
                key = frozenset(joined.elements(cap))
                if key not in subgroups:
                    subgroups.add(key)
                    generators[key] = generators[a] + generators[b]
                    new.append(key)
                    if len(subgroups) > cap:
                        raise CapExceeded("max_elements", cap, "subgroup lattice")
        frontier = new
    return sorted(subgroups, key=lambda s: (len(s), sorted(s)))


def is_complete_class_set(subset: ClassSubset, caps: Caps) -> bool:
    """没有真子群与 c 中每个共轭类都相交"""
    classes = [subset.table.classes[cid].elements for cid in subset.class_ids]
    order = subset.group.order
    for h in subgroup_lattice(subset.group, caps):
        if len(h) == order:
            continue
        if all(h & cls for cls in classes):
            logger.debug("找到与所有类相交的真子群", order=len(h))
            return False
    return True
