"""
异常层级

InputError 系列对应退出码 1，CapExceeded 系列对应退出码 2。
"""


class HurwitzError(Exception):
    """所有领域错误的基类"""

    exit_code = 1


class InputError(HurwitzError):
    """输入不合法（格式、次数、前置条件）"""


class ParseError(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotProductOne(InputError):
    pass


class EntryOutsideC(InputError):
    pass


class HNotContaining(InputError):
    pass


class CNotConjugationClosed(InputError):
    pass


class CDoesNotGenerate(InputError):
    pass


class NotAUnitSubgroup(InputError):
    pass


class NotAUnit(InputError):
    pass


class PowerLeavesC(InputError):
    pass


class NotAbelian(InputError):
    pass


class CoverMismatch(InputError):
    pass


class UnknownExample(InputError):
    pass


class CapExceeded(HurwitzError):
    """资源上限耗尽：结果不确定，不代表数学上的否定"""

    exit_code = 2

    def __init__(self, cap: str, limit: int, detail: str = ""):
        self.cap = cap
        self.limit = limit
        message = f"{cap} exceeded (limit {limit})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class CosetLimitExceeded(CapExceeded):
    def __init__(self, limit: int):
        super().__init__("max_cosets", limit, "coset enumeration did not close")
