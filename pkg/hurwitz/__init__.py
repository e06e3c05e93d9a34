"""
Hurwitz - 霍尔维茨空间连通分支的组合模型

辫群轨道、多重判别式、有理性判据与提升不变量
"""
__version__ = "0.1.0"
