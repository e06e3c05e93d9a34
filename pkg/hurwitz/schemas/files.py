"""
输入文件格式（JSON）
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class GroupFile(BaseModel):
    degree: int = Field(gt=0, description="作用点的个数")
    generators: List[str] = Field(default_factory=list, description="轮换记号的生成元")


class ComponentFile(BaseModel):
    points: int = Field(gt=0, description="置换作用的点数")
    degree: int = Field(ge=0, description="元组长度")
    entries: List[str] = Field(alias="tuple", description="典范代表元，每项一个轮换记号")
    orbit_size: Optional[int] = Field(None, description="辫群轨道大小")
    monodromy_order: Optional[int] = Field(None, description="单值群的阶")

    model_config = {"populate_by_name": True}
