"""
元组、辫群作用与连通分支

一个连通分支即积为 1 的元组的辫群轨道，用轨道中字典序最小的元组作典范代表元。
σ_i·(…, a, b, …) = (…, a b a^{-1}, a, …)
σ_i^{-1}·(…, a, b, …) = (…, b, b^{-1} a b, …)
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import structlog

from hurwitz.core.exceptions import (
    CapExceeded,
    CNotConjugationClosed,
    DegreeMismatch,
    EntryOutsideC,
    HNotContaining,
    IndexOutOfRange,
    NotProductOne,
)
from hurwitz.schemas.caps import Caps
from hurwitz.services.permcore import (
    ClassTable,
    Images,
    Permutation,
    PermutationGroup,
    build_group,
    compose,
    conjugacy_classes,
    conjugate,
    inverse,
)

logger = structlog.get_logger(__name__)

TupleKey = Tuple[Images, ...]


@dataclass(frozen=True)
class GTuple:
    """群元素的有序元组；points 为置换作用的点数"""

    points: int
    entries: Tuple[Permutation, ...] = ()

    def __post_init__(self) -> None:
        for g in self.entries:
            if g.degree != self.points:
                raise DegreeMismatch(
                    f"Entry of degree {g.degree} in a tuple over {self.points} points"
                )

    @classmethod
    def from_key(cls, points: int, key: TupleKey) -> "GTuple":
        return cls(points, tuple(Permutation(images) for images in key))

    @property
    def degree(self) -> int:
        return len(self.entries)

    @property
    def key(self) -> TupleKey:
        return tuple(g.images for g in self.entries)

    def __add__(self, other: "GTuple") -> "GTuple":
        if self.points != other.points:
            raise DegreeMismatch("Cannot concatenate tuples over different point sets")
        return GTuple(self.points, self.entries + other.entries)


def tuple_product(t: GTuple) -> Permutation:
    """π g = g_1 g_2 ⋯ g_n（从左到右）"""
    result = Permutation.identity(t.points)
    for g in t.entries:
        result = compose(result, g)
    return result


def braid_move(t: GTuple, i: int, inverse_flag: bool = False) -> GTuple:
    """作用 σ_i 或 σ_i^{-1}，i 从 1 开始"""
    if not 1 <= i <= t.degree - 1:
        raise IndexOutOfRange(f"Braid index {i} outside 1..{t.degree - 1}")
    a, b = t.entries[i - 1], t.entries[i]
    if inverse_flag:
        pair = (b, conjugate(a, inverse(b)))
    else:
        pair = (conjugate(b, a), a)
    return GTuple(t.points, t.entries[: i - 1] + pair + t.entries[i + 1:])


def _invert(images: Images) -> Images:
    result = [0] * len(images)
    for i, x in enumerate(images):
        result[x] = i
    return tuple(result)


def _neighbours(state: TupleKey) -> Iterator[TupleKey]:
    """σ_i^{±1} 作用在原始像数组元组上的全部邻居"""
    for i in range(len(state) - 1):
        a, b = state[i], state[i + 1]
        a_inv = _invert(a)
        forward = tuple(a_inv[b[a[x]]] for x in range(len(a)))
        yield state[:i] + (forward, a) + state[i + 2:]
        b_inv = _invert(b)
        backward = tuple(b[a[b_inv[x]]] for x in range(len(a)))
        yield state[:i] + (b, backward) + state[i + 2:]


def braid_orbit(start: TupleKey, max_orbit: int) -> List[TupleKey]:
    """广度优先求整个辫群轨道；邻居按固定顺序展开"""
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for nxt in _neighbours(state):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                if len(order) > max_orbit:
                    logger.warning("辫群轨道超出上限", cap="max_orbit", limit=max_orbit)
                    raise CapExceeded("max_orbit", max_orbit, "braid orbit")
                queue.append(nxt)
    return order


@dataclass(frozen=True)
class Component:
    """
    连通分支：典范代表元 + 缓存的不变量

    相等性只看典范代表元。
    """

    canonical: GTuple
    orbit_size: int = field(default=1, compare=False)

    @property
    def degree(self) -> int:
        return self.canonical.degree

    @property
    def points(self) -> int:
        return self.canonical.points

    @property
    def entries(self) -> Tuple[Permutation, ...]:
        return self.canonical.entries

    @cached_property
    def monodromy(self) -> PermutationGroup:
        return build_group(self.canonical.entries, degree=self.points)

    def __lt__(self, other: "Component") -> bool:
        return (self.degree, self.canonical.key) < (other.degree, other.canonical.key)


class ComponentIndex:
    """已访问元组到分支的索引，重复的轨道查询直接命中"""

    def __init__(self) -> None:
        self._by_key: Dict[TupleKey, Component] = {}

    def get(self, key: TupleKey) -> Optional[Component]:
        return self._by_key.get(key)

    def register(self, orbit: Sequence[TupleKey], component: Component) -> None:
        for key in orbit:
            self._by_key[key] = component

    def __len__(self) -> int:
        return len(self._by_key)


def component_of(
    t: GTuple, caps: Caps, index: Optional[ComponentIndex] = None
) -> Component:
    key = t.key
    if index is not None:
        cached = index.get(key)
        if cached is not None:
            return cached
    if not tuple_product(t).is_identity:
        raise NotProductOne("Tuple product is not the identity")
    orbit = braid_orbit(key, caps.max_orbit)
    component = Component(GTuple.from_key(t.points, min(orbit)), orbit_size=len(orbit))
    if index is not None:
        index.register(orbit, component)
    return component


def identity_component(points: int) -> Component:
    return Component(GTuple(points))


def concat(
    x: Component, y: Component, caps: Caps, index: Optional[ComponentIndex] = None
) -> Component:
    return component_of(x.canonical + y.canonical, caps, index)


def concat_all(
    points: int,
    factors: Sequence[Component],
    caps: Caps,
    index: Optional[ComponentIndex] = None,
) -> Component:
    t = GTuple(points)
    for x in factors:
        t = t + x.canonical
    return component_of(t, caps, index)


def component_power(x: Component, n: int, caps: Caps) -> Component:
    """x^n：n 次拼接，x^0 为单位分支"""
    return concat_all(x.points, [x] * n, caps)


def conjugate_tuple(t: GTuple, gamma: Permutation) -> GTuple:
    return GTuple(t.points, tuple(conjugate(g, gamma) for g in t.entries))


def conjugate_component(
    x: Component, gamma: Permutation, caps: Caps, index: Optional[ComponentIndex] = None
) -> Component:
    """x^γ：逐项共轭"""
    return component_of(conjugate_tuple(x.canonical, gamma), caps, index)


class ClassSubset:
    """
    (H, c)：子群 H 及其中共轭封闭的子集 c

    class_ids 为落在 c 内的共轭类编号（即 D）。
    """

    def __init__(self, group: PermutationGroup, c: Sequence[Permutation], caps: Caps):
        self.group = group
        self.table: ClassTable = conjugacy_classes(group, caps.max_elements)
        self.elements: Tuple[Permutation, ...] = tuple(sorted(set(c)))
        members = set(self.elements)
        for g in self.elements:
            if g not in self.table.element_to_class:
                raise HNotContaining(f"Element {g!r} of c is not in H")
        ids = sorted({self.table.class_of(g) for g in self.elements})
        for class_id in ids:
            if not self.table.classes[class_id].elements <= members:
                raise CNotConjugationClosed("c is not closed under conjugation in H")
        self.class_ids: Tuple[int, ...] = tuple(ids)

    @classmethod
    def from_classes(
        cls, group: PermutationGroup, representatives: Sequence[Permutation], caps: Caps
    ) -> "ClassSubset":
        """c 取为所给代表元所在共轭类之并"""
        table = conjugacy_classes(group, caps.max_elements)
        c: set = set()
        for g in representatives:
            if g not in table.element_to_class:
                raise HNotContaining(f"Element {g!r} is not in H")
            c |= table.classes[table.class_of(g)].elements
        return cls(group, sorted(c), caps)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.table.element_to_class and self.table.class_of(g) in self.class_ids

    def representative(self, class_id: int) -> Permutation:
        return self.table.classes[class_id].representative

    def class_size(self, class_id: int) -> int:
        return self.table.classes[class_id].size


@dataclass(frozen=True)
class Multidiscriminant:
    """μ_{H,c}：D 中每个共轭类出现的次数"""

    counts: Tuple[Tuple[int, int], ...]

    @classmethod
    def zero(cls, class_ids: Sequence[int]) -> "Multidiscriminant":
        return cls(tuple((class_id, 0) for class_id in class_ids))

    @property
    def class_ids(self) -> Tuple[int, ...]:
        return tuple(class_id for class_id, _ in self.counts)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def __getitem__(self, class_id: int) -> int:
        return self.as_dict()[class_id]

    def total(self) -> int:
        return sum(n for _, n in self.counts)

    def minimum(self) -> int:
        return min((n for _, n in self.counts), default=0)

    def __add__(self, other: "Multidiscriminant") -> "Multidiscriminant":
        if self.class_ids != other.class_ids:
            raise DegreeMismatch("Multidiscriminants over different class sets")
        return Multidiscriminant(
            tuple((cid, a + b) for (cid, a), (_, b) in zip(self.counts, other.counts))
        )


def multidiscriminant(t: GTuple, subset: ClassSubset) -> Multidiscriminant:
    counts = {class_id: 0 for class_id in subset.class_ids}
    for g in t.entries:
        if g not in subset.table.element_to_class:
            raise HNotContaining(f"Entry {g!r} is not in H")
        class_id = subset.table.class_of(g)
        if class_id not in counts:
            raise EntryOutsideC(f"Entry {g!r} lies outside c")
        counts[class_id] += 1
    return Multidiscriminant(tuple(sorted(counts.items())))


def occurring_classes(t: GTuple, table: ClassTable) -> FrozenSet[int]:
    """c_H(g)：元组中出现的共轭类"""
    return frozenset(table.class_of(g) for g in t.entries)


def enumerate_components(
    subset: ClassSubset,
    n: int,
    caps: Caps,
    require_generating: bool = False,
    index: Optional[ComponentIndex] = None,
) -> List[Component]:
    """
    c 中元素组成、积为 1 的全部 n 元组的辫群轨道

    对前 n-1 项做深度优先，最后一项由前缀积唯一确定；已落入某个轨道的元组跳过。
    """
    points = subset.group.degree
    if n == 0:
        return [identity_component(points)]

    members = set(subset.elements)
    ordered = subset.elements
    visited: set = set()
    found: List[Component] = []
    identity = Permutation.identity(points)

    def extend(prefix: List[Permutation], running: Permutation) -> None:
        if len(prefix) == n - 1:
            last = inverse(running)
            if last not in members:
                return
            t = GTuple(points, tuple(prefix) + (last,))
            key = t.key
            if key in visited:
                return
            orbit = braid_orbit(key, caps.max_orbit)
            visited.update(orbit)
            component = Component(GTuple.from_key(points, min(orbit)), orbit_size=len(orbit))
            if index is not None:
                index.register(orbit, component)
            found.append(component)
            return
        for g in ordered:
            prefix.append(g)
            extend(prefix, compose(running, g))
            prefix.pop()

    extend([], identity)
    if require_generating:
        found = [x for x in found if x.monodromy.same_group(subset.group)]
    found.sort()
    logger.info(
        "分支枚举完成",
        degree=n,
        group_order=subset.group.order,
        components=len(found),
        generating_only=require_generating,
    )
    return found
