"""
报告中的结果模型
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from hurwitz.schemas.files import ComponentFile
from hurwitz.services.braidcore import ClassSubset, Component, Multidiscriminant
from hurwitz.services.lifting import LiftingInvariant, SchurCover
from hurwitz.services.permcore import ClassTable, PermutationGroup, format_cycles


class GroupSummary(BaseModel):
    degree: int
    order: int
    transitive: bool
    abelian: bool
    generators: List[str]
    base: List[int] = Field(description="稳定子链的基点")

    @classmethod
    def from_group(cls, group: PermutationGroup) -> "GroupSummary":
        return cls(
            degree=group.degree,
            order=group.order,
            transitive=group.is_transitive(),
            abelian=group.is_abelian(),
            generators=[format_cycles(g) for g in group.generators],
            base=[b + 1 for b in group.base],
        )


class ClassSummary(BaseModel):
    id: int
    representative: str
    size: int
    element_order: int

    @classmethod
    def from_table(cls, table: ClassTable) -> List["ClassSummary"]:
        return [
            cls(
                id=class_id,
                representative=format_cycles(cls_.representative),
                size=cls_.size,
                element_order=cls_.element_order,
            )
            for class_id, cls_ in enumerate(table.classes)
        ]


def component_summary(x: Component) -> Dict[str, object]:
    record = ComponentFile(
        points=x.points,
        degree=x.degree,
        entries=[format_cycles(g) for g in x.entries],
        orbit_size=x.orbit_size,
        monodromy_order=x.monodromy.order,
    )
    return record.model_dump(by_alias=True)


def multidiscriminant_summary(psi: Multidiscriminant, subset: ClassSubset) -> Dict[str, int]:
    """以类代表元的轮换记号为键"""
    return {format_cycles(subset.representative(cid)): n for cid, n in psi.counts}


class InvariantSummary(BaseModel):
    s_part: int = Field(description="S_c 中的元素（正则表示中的陪集编号）")
    s_order: int
    s_projection: str = Field(description="在 H 中的像")
    psi: Dict[str, int]

    @classmethod
    def from_invariant(cls, v: LiftingInvariant, cover: SchurCover) -> "InvariantSummary":
        return cls(
            s_part=v.s_part,
            s_order=cover.element_order(v.s_part),
            s_projection=format_cycles(cover.project(v.s_part)),
            psi=multidiscriminant_summary(v.psi, cover.subset),
        )


class CoverSummary(BaseModel):
    size: int
    kernel_order: int
    group_order: int
    coset_table_size: int
    exponent: int
    generator_projections: Dict[str, str] = Field(description="生成元 [g] 的编号到 g")
    consistent: bool
    kernel_central: Optional[bool] = None

    @classmethod
    def from_cover(cls, cover: SchurCover, consistent: bool) -> "CoverSummary":
        return cls(
            size=cover.size,
            kernel_order=cover.kernel_order,
            group_order=cover.subset.group.order,
            coset_table_size=len(cover.table),
            exponent=cover.exponent,
            generator_projections={
                str(i + 1): format_cycles(g) for i, g in enumerate(cover.projection)
            },
            consistent=consistent,
            kernel_central=all(cover.is_central(a) for a in cover.kernel()),
        )
