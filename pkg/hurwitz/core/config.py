from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # 项目基础配置
    PROJECT_NAME: str = "Hurwitz"
    PROJECT_DESCRIPTION: str = "Braid orbits, multidiscriminants and lifting invariants"
    VERSION: str = "0.1.0"

    # 资源上限（所有可能指数增长的运算都显式设限）
    MAX_ORBIT: int = 5_000_000
    MAX_COSETS: int = 1_000_000
    MAX_ELEMENTS: int = 100_000
    MAX_CONJUGACY_NODES: int = 1_000_000

    # 日志配置
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False

    # 开发环境
    DEBUG: bool = False

    model_config = {
        "env_file": ".env",
        "env_prefix": "HURWITZ_",
        "case_sensitive": True,
        "extra": "ignore"
    }

settings = Settings()
