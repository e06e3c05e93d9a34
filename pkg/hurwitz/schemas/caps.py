from typing import Optional

from pydantic import BaseModel, Field

from hurwitz.core.config import settings


class Caps(BaseModel):
    """一次计算使用的资源上限，报告中原样回显"""

    max_orbit: int = Field(gt=0, description="单个辫群轨道的最大元组数")
    max_cosets: int = Field(gt=0, description="陪集枚举的最大陪集数")
    max_elements: int = Field(gt=0, description="群元素枚举的最大阶")
    max_nodes: int = Field(gt=0, description="共轭搜索的最大节点数")

    model_config = {"frozen": True}

    @classmethod
    def from_settings(
        cls,
        max_orbit: Optional[int] = None,
        max_cosets: Optional[int] = None,
        max_elements: Optional[int] = None,
        max_nodes: Optional[int] = None,
    ) -> "Caps":
        return cls(
            max_orbit=settings.MAX_ORBIT if max_orbit is None else max_orbit,
            max_cosets=settings.MAX_COSETS if max_cosets is None else max_cosets,
            max_elements=settings.MAX_ELEMENTS if max_elements is None else max_elements,
            max_nodes=settings.MAX_CONJUGACY_NODES if max_nodes is None else max_nodes,
        )
