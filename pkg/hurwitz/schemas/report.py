from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from hurwitz.schemas.caps import Caps


class Report(BaseModel):
    """
    一次命令的结构化报告

    默认不含耗时，相同输入下逐字节一致；--timing 时才写入 wall_time。
    """

    command: List[str] = Field(description="命令行回显")
    inputs_digest: str = Field(description="命令行与全部输入文件内容的 sha256")
    results: Dict[str, Any] = Field(default_factory=dict, description="运算结果")
    caps: Caps = Field(description="实际生效的资源上限")
    wall_time: Optional[float] = Field(None, description="耗时（秒）")

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)
