"""
Todd-Coxeter 陪集枚举（HLT 策略加推论处理，平凡子群）

字母用带符号整数表示：+i 为第 i 个生成元，-i 为其逆（i 从 1 开始）。
表的第 2(i-1) 列对应 +i，第 2(i-1)+1 列对应 -i。
"""
from collections import deque
from typing import List, Optional, Sequence, Tuple

import structlog

from hurwitz.core.exceptions import CosetLimitExceeded

logger = structlog.get_logger(__name__)

Word = Sequence[int]

_MAX_DEDUCTIONS = 4096


def letter_column(letter: int) -> int:
    if letter > 0:
        return 2 * (letter - 1)
    return 2 * (-letter - 1) + 1


def free_reduce(word: Word) -> List[int]:
    reduced: List[int] = []
    for letter in word:
        if reduced and reduced[-1] == -letter:
            reduced.pop()
        else:
            reduced.append(letter)
    return reduced


def cyclically_reduce(word: Word) -> List[int]:
    reduced = free_reduce(word)
    while len(reduced) >= 2 and reduced[0] == -reduced[-1]:
        reduced = reduced[1:-1]
    return reduced


class CosetTable:
    """
    平凡子群的陪集表，完成后即群的正则表示

    table[α][col] 为 α 乘以该列字母后的陪集；p 为并查集（p[α] == α 表示活陪集）。
    上限按活陪集计数；死陪集过多时压缩表。
    """

    def __init__(self, num_generators: int, relators: Sequence[Word], max_cosets: int):
        self.num_generators = num_generators
        self.columns = 2 * num_generators
        self.max_cosets = max_cosets
        reduced = (cyclically_reduce(r) for r in relators)
        self.relators: List[List[int]] = [
            [letter_column(x) for x in r] for r in reduced if r
        ]
        self.table: List[List[Optional[int]]] = [[None] * self.columns]
        self.p: List[int] = [0]
        self.live = 1
        self.deductions: List[Tuple[int, int]] = []
        self._conjugates = self._relator_conjugates()

    def _relator_conjugates(self) -> List[List[List[int]]]:
        """按首字母分组的关系子（及其逆）的全部循环轮换"""
        by_column: List[List[List[int]]] = [[] for _ in range(self.columns)]
        seen = set()
        for word in self.relators:
            inverse_word = [column ^ 1 for column in reversed(word)]
            for w in (word, inverse_word):
                for i in range(len(w)):
                    rotated = tuple(w[i:] + w[:i])
                    if rotated not in seen:
                        seen.add(rotated)
                        by_column[rotated[0]].append(list(rotated))
        return by_column

    @property
    def n(self) -> int:
        return len(self.table)

    def define(self, alpha: int, column: int) -> None:
        if self.live >= self.max_cosets:
            logger.warning("陪集枚举超出上限", cap="max_cosets", limit=self.max_cosets)
            raise CosetLimitExceeded(self.max_cosets)
        beta = len(self.table)
        self.table.append([None] * self.columns)
        self.p.append(beta)
        self.live += 1
        self.table[alpha][column] = beta
        self.table[beta][column ^ 1] = alpha
        self._deduce(alpha, column)

    def _deduce(self, alpha: int, column: int) -> None:
        # 栈溢出时丢弃；逐陪集的关系子扫描仍保证完整性
        if len(self.deductions) >= _MAX_DEDUCTIONS:
            self.deductions.clear()
        self.deductions.append((alpha, column))

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, k: int, lamda: int, queue: List[int]) -> None:
        phi = self.rep(k)
        psi = self.rep(lamda)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            self.live -= 1
            queue.append(v)

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: List[int] = []
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.pop(0)
            for column in range(self.columns):
                delta = table[gamma][column]
                if delta is None:
                    continue
                table[delta][column ^ 1] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                if table[mu][column] is not None:
                    self.merge(nu, table[mu][column], queue)  # type: ignore[arg-type]
                elif table[nu][column ^ 1] is not None:
                    self.merge(mu, table[nu][column ^ 1], queue)  # type: ignore[arg-type]
                else:
                    table[mu][column] = nu
                    table[nu][column ^ 1] = mu
                    self._deduce(mu, column)

    def scan_and_fill(self, alpha: int, word: List[int], fill: bool = True) -> None:
        """
        沿关系子从 α 正向与反向扫描；只差一格时记为推论，
        fill 为真时在更大的缺口处定义新陪集直到扫描完成
        """
        table = self.table
        r = len(word)
        f = alpha
        i = 0
        b = alpha
        j = r - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]  # type: ignore[assignment]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]  # type: ignore[assignment]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                self._deduce(f, word[i])
                return
            if not fill:
                return
            self.define(f, word[i])

    def process_deductions(self) -> None:
        """对每条推论 (α, x)，在 α 处扫描以 x 开头、在 αx 处扫描以 x⁻¹ 开头的关系子轮换"""
        while self.deductions:
            alpha, column = self.deductions.pop()
            if self.p[alpha] != alpha:
                continue
            for word in self._conjugates[column]:
                self.scan_and_fill(alpha, word, fill=False)
                if self.p[alpha] != alpha:
                    break
            if self.p[alpha] != alpha:
                continue
            beta = self.table[alpha][column]
            if beta is None or self.p[beta] != beta:
                continue
            for word in self._conjugates[column ^ 1]:
                self.scan_and_fill(beta, word, fill=False)
                if self.p[beta] != beta:
                    break

    def compress(self, alpha: int) -> int:
        """删去死陪集，保持活陪集的相对顺序；返回 alpha 之前活陪集的个数"""
        order = [k for k in range(len(self.table)) if self.p[k] == k]
        numbering = {old: new for new, old in enumerate(order)}
        self.table = [
            [None if e is None else numbering[self.rep(e)] for e in self.table[old]]
            for old in order
        ]
        self.p = list(range(len(order)))
        self.deductions = [
            (numbering[a], column) for a, column in self.deductions if a in numbering
        ]
        logger.debug("陪集表压缩", live=len(order))
        return sum(1 for old in order if old < alpha)

    def enumerate(self) -> None:
        alpha = 0
        while alpha < self.n:
            if self.p[alpha] == alpha:
                for word in self.relators:
                    self.scan_and_fill(alpha, word)
                    self.process_deductions()
                    if self.p[alpha] != alpha:
                        break
                if self.p[alpha] == alpha:
                    for column in range(self.columns):
                        if self.table[alpha][column] is None:
                            self.define(alpha, column)
                    self.process_deductions()
            alpha += 1
            if self.n - self.live > self.live:
                alpha = self.compress(alpha)
        self._standardize()

    def _standardize(self) -> None:
        """删去死陪集并按（陪集, 列）的首次出现顺序重新编号"""
        live_table = self.table

        def image(alpha: int, column: int) -> int:
            entry = live_table[alpha][column]
            assert entry is not None
            return self.rep(entry)

        numbering = {self.rep(0): 0}
        order = [self.rep(0)]
        queue = deque(order)
        while queue:
            alpha = queue.popleft()
            for column in range(self.columns):
                beta = image(alpha, column)
                if beta not in numbering:
                    numbering[beta] = len(order)
                    order.append(beta)
                    queue.append(beta)
        self.table = [
            [numbering[image(alpha, column)] for column in range(self.columns)]
            for alpha in order
        ]
        self.p = list(range(len(order)))

    def is_consistent(self) -> bool:
        """表完整且每个关系子从每个陪集出发都回到自身"""
        for row in self.table:
            if any(entry is None for entry in row):
                return False
        for alpha in range(self.n):
            for column in range(self.columns):
                beta = self.table[alpha][column]
                if self.table[beta][column ^ 1] != alpha:  # type: ignore[index]
                    return False
            for word in self.relators:
                gamma: int = alpha
                for column in word:
                    gamma = self.table[gamma][column]  # type: ignore[assignment]
                if gamma != alpha:
                    return False
        return True


def coset_enumerate(
    num_generators: int, relators: Sequence[Word], max_cosets: int
) -> CosetTable:
    """对 ⟨X | R⟩ 关于平凡子群做陪集枚举；未在上限内闭合则抛出 CosetLimitExceeded"""
    table = CosetTable(num_generators, relators, max_cosets)
    table.enumerate()
    logger.info("陪集表闭合", generators=num_generators, size=table.n)
    return table
