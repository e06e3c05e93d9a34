"""
命令行输入的读取与解析
"""
import math
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from hurwitz.cli.session import Session
from hurwitz.core.exceptions import InputError, ParseError
from hurwitz.schemas.caps import Caps
from hurwitz.schemas.files import ComponentFile, GroupFile
from hurwitz.services.braidcore import ClassSubset, Component, GTuple, component_of
from hurwitz.services.galois import RationalityContext, make_context
from hurwitz.services.permcore import (
    Permutation,
    PermutationGroup,
    build_group,
    parse_cycles,
)

CLASS_KEYWORDS = ("transpositions", "involutions", "nonidentity", "all")


def _read(path: str, session: Session) -> bytes:
    data = Path(path).read_bytes()
    session.record_input(data)
    return data


def load_group(path: str, session: Session) -> PermutationGroup:
    try:
        spec = GroupFile.model_validate_json(_read(path, session))
    except ValidationError as e:
        raise ParseError(f"Malformed group file {path}: {e.errors()[0]['msg']}")
    generators = [parse_cycles(text, spec.degree) for text in spec.generators]
    return build_group(generators, degree=spec.degree)


def require_group(path: Optional[str], session: Session) -> PermutationGroup:
    if path is None:
        raise InputError("This command requires --group")
    return load_group(path, session)


def load_component(path: str, session: Session, caps: Caps) -> Component:
    try:
        spec = ComponentFile.model_validate_json(_read(path, session))
    except ValidationError as e:
        raise ParseError(f"Malformed component file {path}: {e.errors()[0]['msg']}")
    if spec.degree != len(spec.entries):
        raise ParseError(
            f"Component file {path} declares degree {spec.degree} "
            f"but lists {len(spec.entries)} entries"
        )
    entries = tuple(parse_cycles(text, spec.points) for text in spec.entries)
    return component_of(GTuple(spec.points, entries), caps)


def parse_tuple(text: str, points: int) -> GTuple:
    """ "(1, 2); (1, 3)" → GTuple；空串为空元组"""
    parts = [part for part in (p.strip() for p in text.split(";")) if part]
    return GTuple(points, tuple(parse_cycles(part, points) for part in parts))


def parse_elements(text: str, points: int) -> List[Permutation]:
    return list(parse_tuple(text, points).entries)


def load_tuples(
    tuple_texts: Sequence[str], group: Optional[PermutationGroup]
) -> List[GTuple]:
    if tuple_texts and group is None:
        raise InputError("--tuple requires --group to fix the number of points")
    if group is None:
        return []
    return [parse_tuple(text, group.degree) for text in tuple_texts]


def load_components(
    component_files: Sequence[str],
    tuple_texts: Sequence[str],
    group: Optional[PermutationGroup],
    session: Session,
    caps: Caps,
) -> List[Component]:
    components = [load_component(path, session, caps) for path in component_files]
    components += [component_of(t, caps) for t in load_tuples(tuple_texts, group)]
    return components


def select_classes(spec: str, group: PermutationGroup, caps: Caps) -> ClassSubset:
    """--classes：关键字或以分号分隔的类代表元（取其共轭类之并）"""
    elements = group.elements(caps.max_elements)
    keyword = spec.strip().lower()
    if keyword == "all":
        chosen = list(elements)
    elif keyword == "nonidentity":
        chosen = [g for g in elements if not g.is_identity]
    elif keyword == "involutions":
        chosen = [g for g in elements if g.order == 2]
    elif keyword == "transpositions":
        chosen = [g for g in elements if g.cycle_type() == (2,)]
    else:
        return ClassSubset.from_classes(group, parse_elements(spec, group.degree), caps)
    return ClassSubset(group, chosen, caps)


def parse_units(spec: str, modulus: int) -> RationalityContext:
    keyword = spec.strip().lower()
    if keyword in ("full", "trivial"):
        return make_context(modulus, keyword)
    try:
        units = [int(part) for part in keyword.split(",") if part.strip()]
    except ValueError:
        raise ParseError(f"Malformed unit list {spec!r}")
    return make_context(modulus, "explicit", units)


def group_exponent(group: PermutationGroup, caps: Caps) -> int:
    """缺省模数：群的指数（交换时即生成元阶的最小公倍数）"""
    if group.is_abelian():
        return math.lcm(1, *(g.order for g in group.generators))
    return math.lcm(1, *(g.order for g in group.elements(caps.max_elements)))
