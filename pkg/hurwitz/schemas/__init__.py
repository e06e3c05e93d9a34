from .caps import Caps
from .files import ComponentFile, GroupFile
from .report import Report

__all__ = ["Caps", "ComponentFile", "GroupFile", "Report"]
