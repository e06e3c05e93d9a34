"""
置换与置换群运算

约定：
- 合成从左到右：compose(p, q) 先作用 p 再作用 q
- 共轭 g^h = h g h^{-1}
- 内部点从 0 编号；轮换记号与 to_list() 从 1 编号
- 元素全序：images 数组的字典序（恒等置换最小）
"""
import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import structlog

from hurwitz.core.exceptions import CapExceeded, DegreeMismatch, InputError, ParseError

logger = structlog.get_logger(__name__)

Images = Tuple[int, ...]

_PRODUCT_RE = re.compile(r"\s*(\([^()]*\)\s*)*")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_POINT_SEP_RE = re.compile(r"[\s,]+")


class Permutation:
    """{1..degree} 上的双射，images[i] 为点 i 的像（0 起）"""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        self.images: Images = tuple(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_list(cls, images: Sequence[int]) -> "Permutation":
        """由 1 起编号的像列表构造，并校验双射"""
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ParseError(f"Not a permutation of 1..{len(images)}: {list(images)}")
        return cls(i - 1 for i in images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def to_list(self) -> List[int]:
        return [x + 1 for x in self.images]

    def cycles(self) -> List[Tuple[int, ...]]:
        """非平凡轮换（1 起编号），每个轮换以最小点开头"""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            result.append(tuple(p + 1 for p in cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    @property
    def order(self) -> int:
        return math.lcm(1, *self.cycle_type())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"


def parse_cycles(text: str, degree: int) -> Permutation:
    """解析轮换记号，例如 "(1, 22, 14)(2, 13, 9)"；空串为恒等置换"""
    if degree <= 0:
        raise ParseError("Degree must be positive")
    if not _PRODUCT_RE.fullmatch(text):
        raise ParseError(f"Malformed parentheses in {text!r}")

    images = list(range(degree))
    used = set()
    for body in _CYCLE_RE.findall(text):
        tokens = [tok for tok in _POINT_SEP_RE.split(body.strip()) if tok]
        try:
            cycle = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"Non-integer point in cycle ({body})")
        for point in cycle:
            if not 1 <= point <= degree:
                raise ParseError(f"Point {point} out of range 1..{degree}")
            if point in used:
                raise ParseError(f"Point {point} repeated in {text!r}")
            used.add(point)
        for idx, point in enumerate(cycle):
            images[point - 1] = cycle[(idx + 1) % len(cycle)] - 1
    return Permutation(images)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ", ".join(str(x) for x in cycle) + ")" for cycle in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """先 p 后 q"""
    if p.degree != q.degree:
        raise DegreeMismatch(f"Cannot compose degree {p.degree} with degree {q.degree}")
    qi = q.images
    return Permutation(qi[x] for x in p.images)


def inverse(p: Permutation) -> Permutation:
    result = [0] * p.degree
    for i, x in enumerate(p.images):
        result[x] = i
    return Permutation(result)


def power(p: Permutation, k: int) -> Permutation:
    """p^k，k 可为负"""
    if k < 0:
        p, k = inverse(p), -k
    result = Permutation.identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """g^h = h g h^{-1}"""
    if g.degree != h.degree:
        raise DegreeMismatch(f"Cannot conjugate degree {g.degree} by degree {h.degree}")
    hinv = inverse(h).images
    gi = g.images
    return Permutation(hinv[gi[x]] for x in h.images)


def element_order(p: Permutation) -> int:
    return p.order


class PermutationGroup:
    """
    由生成元给出的置换群，构造时用确定性 Schreier-Sims 建立稳定子链

    基点按 base_order 选取（默认依次取最小的被移动点），因此元素枚举顺序可复现。
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        base_order: Optional[Sequence[int]] = None,
    ):
        if degree <= 0:
            raise InputError("Group degree must be positive")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"Generator of degree {g.degree} in a group of degree {degree}"
                )
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        if base_order is None:
            self._base_order = tuple(range(degree))
        else:
            self._base_order = tuple(p - 1 for p in base_order) + tuple(
                p for p in range(degree) if p + 1 not in set(base_order)
            )

        self.base: List[int] = []
        self.strong: List[List[Permutation]] = []
        self.transversals: List[Dict[int, Permutation]] = []
        self._inverse_transversals: List[Dict[int, Permutation]] = []
        self._elements: Optional[List[Permutation]] = None

        self._schreier_sims()
        self.order = math.prod(len(t) for t in self.transversals)
        logger.debug(
            "稳定子链构建完成",
            degree=degree,
            order=self.order,
            base=[b + 1 for b in self.base],
        )

    # === 稳定子链 ===

    def _first_moved(self, g: Permutation) -> int:
        for point in self._base_order:
            if g.images[point] != point and point not in self.base:
                return point
        raise AssertionError("identity has no moved point")

    def _fixes_prefix(self, g: Permutation, level: int) -> bool:
        return all(g.images[b] == b for b in self.base[:level])

    def _rebuild_level(self, level: int) -> None:
        root = self.base[level]
        identity = Permutation.identity(self.degree)
        transversal = {root: identity}
        queue = deque([root])
        while queue:
            point = queue.popleft()
            for s in self.strong[level]:
                image = s.images[point]
                if image not in transversal:
                    transversal[image] = compose(transversal[point], s)
                    queue.append(image)
        self.transversals[level] = transversal
        self._inverse_transversals[level] = {
            point: inverse(u) for point, u in transversal.items()
        }

    def _add_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.transversals.append({})
        self._inverse_transversals.append({})

    def _strip(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        for level in range(start, len(self.base)):
            beta = g.images[self.base[level]]
            u_inv = self._inverse_transversals[level].get(beta)
            if u_inv is None:
                return g, level
            g = compose(g, u_inv)
        return g, len(self.base)

    def _schreier_sims(self) -> None:
        gens = [g for g in dict.fromkeys(self.generators) if not g.is_identity]
        for g in gens:
            if self._fixes_prefix(g, len(self.base)):
                self._add_level(self._first_moved(g))
        for level in range(len(self.base)):
            self.strong[level] = [g for g in gens if self._fixes_prefix(g, level)]
            self._rebuild_level(level)

        level = len(self.base) - 1
        while level >= 0:
            jump = self._check_level(level)
            level = level - 1 if jump is None else jump

    def _check_level(self, level: int) -> Optional[int]:
        """检查第 level 层的 Schreier 生成元；若有新强生成元则返回需回溯到的层"""
        transversal = self.transversals[level]
        inverse_transversal = self._inverse_transversals[level]
        for beta, u in list(transversal.items()):
            for s in list(self.strong[level]):
                h = compose(compose(u, s), inverse_transversal[s.images[beta]])
                if h.is_identity:
                    continue
                residue, stop = self._strip(h, level + 1)
                if stop == len(self.base) and residue.is_identity:
                    continue
                if stop == len(self.base):
                    self._add_level(self._first_moved(residue))
                for target in range(level + 1, stop + 1):
                    self.strong[target].append(residue)
                    self._rebuild_level(target)
                return stop
        return None

    # === 查询 ===

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"Element of degree {p.degree} vs group degree {self.degree}")
        residue, stop = self._strip(p)
        return stop == len(self.base) and residue.is_identity

    def elements(self, cap: int) -> List[Permutation]:
        """全部元素，按字典序排列"""
        if self.order > cap:
            raise CapExceeded("max_elements", cap, f"group order {self.order}")
        if self._elements is None:
            products = [self.identity]
            for level in reversed(range(len(self.base))):
                reps = list(self.transversals[level].values())
                products = [compose(e, u) for e in products for u in reps]
            self._elements = sorted(products)
        return self._elements

    def orbit(self, point: int) -> List[int]:
        """点的轨道（1 起编号，升序）"""
        seen = {point - 1}
        queue = deque([point - 1])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(p + 1 for p in seen)

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:]
        )

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: "PermutationGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def is_normal_in(self, other: "PermutationGroup") -> bool:
        return all(
            self.contains(conjugate(n, g))
            for n in self.generators
            for g in other.generators
        )

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"PermutationGroup(degree={self.degree}, order={self.order}, [{gens}])"


def build_group(
    generators: Sequence[Permutation],
    degree: Optional[int] = None,
    base_order: Optional[Sequence[int]] = None,
) -> PermutationGroup:
    """⟨generators⟩；生成元为空时必须给出 degree"""
    if degree is None:
        if not generators:
            raise InputError("An explicit degree is required for an empty generator list")
        degree = generators[0].degree
    return PermutationGroup(degree, generators, base_order=base_order)


def join(*groups: PermutationGroup) -> PermutationGroup:
    """⟨H_1, ..., H_n⟩"""
    degree = groups[0].degree
    gens = [g for group in groups for g in group.generators]
    return build_group(gens, degree=degree)


def enumerate_elements(group: PermutationGroup, cap: int) -> List[Permutation]:
    return group.elements(cap)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    elements: FrozenSet[Permutation]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def element_order(self) -> int:
        return self.representative.order


class ClassTable:
    """共轭类表；类按最小元素排序，代表元即最小元素，0 号类为单位元"""

    def __init__(self, group: PermutationGroup, classes: List[ConjugacyClass]):
        self.group = group
        self.classes = classes
        self.element_to_class: Dict[Permutation, int] = {}
        for class_id, cls in enumerate(classes):
            for g in cls.elements:
                self.element_to_class[g] = class_id

    def class_of(self, g: Permutation) -> int:
        return self.element_to_class[g]

    def __len__(self) -> int:
        return len(self.classes)


def _conjugation_orbit(
    g: Permutation, generators: Sequence[Permutation]
) -> FrozenSet[Permutation]:
    seen = {g}
    queue = deque([g])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = conjugate(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def conjugacy_classes(group: PermutationGroup, cap: int) -> ClassTable:
    elements = group.elements(cap)
    assigned: set = set()
    classes = []
    for g in elements:
        if g in assigned:
            continue
        orbit = _conjugation_orbit(g, group.generators)
        assigned |= orbit
        classes.append(ConjugacyClass(representative=g, elements=orbit))
    logger.debug("共轭类计算完成", order=group.order, classes=len(classes))
    return ClassTable(group, classes)


def are_conjugate(
    group: PermutationGroup, a: Permutation, b: Permutation, node_cap: int
) -> bool:
    """在 group 中 b 是否为 a 的共轭；用生成元做广度优先搜索，不枚举整个群"""
    if a.degree != b.degree or a.degree != group.degree:
        raise DegreeMismatch("Elements and group must share one degree")
    if a == b:
        return True
    if a.cycle_type() != b.cycle_type():
        return False
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for s in group.generators:
            y = conjugate(x, s)
            if y == b:
                return True
            if y not in seen:
                seen.add(y)
                if len(seen) > node_cap:
                    logger.warning("共轭搜索超出上限", cap="max_nodes", limit=node_cap)
                    raise CapExceeded("max_nodes", node_cap, "conjugation orbit search")
                queue.append(y)
    return False


def subgroup_product_test(
    h1: PermutationGroup, h2: PermutationGroup, cap: int
) -> Tuple[PermutationGroup, bool]:
    """返回 (⟨H1, H2⟩, H1·H2 是否为群)，判据 |H1||H2| = |H|·|H1 ∩ H2|"""
    if h1.degree != h2.degree:
        raise DegreeMismatch("Subgroups must share one degree")
    joined = join(h1, h2)
    small, big = (h1, h2) if h1.order <= h2.order else (h2, h1)
    intersection = sum(1 for g in small.elements(cap) if big.contains(g))
    return joined, h1.order * h2.order == joined.order * intersection


def order_statistics(group: PermutationGroup, cap: int) -> Tuple[int, int]:
    """(指数, ψ)，ψ 为全部元素阶之和"""
    orders = [g.order for g in group.elements(cap)]
    return math.lcm(*orders), sum(orders)


def derived_subgroup(group: PermutationGroup) -> PermutationGroup:
    """生成元换位子的正规闭包"""
    gens = group.generators
    commutators = []
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            c = compose(compose(inverse(x), inverse(y)), compose(x, y))
            if not c.is_identity:
                commutators.append(c)
    closure = build_group(commutators, degree=group.degree)
    changed = True
    while changed:
        changed = False
        for k in closure.generators:
            for g in gens:
                conj = conjugate(k, g)
                if not closure.contains(conj):
                    closure = build_group(list(closure.generators) + [conj], degree=group.degree)
                    changed = True
                    break
            if changed:
                break
    return closure
