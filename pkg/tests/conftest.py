"""
共享夹具：小群语料（Z/n、V4、S3、D4、A4、S4）与资源上限
"""
import json
from pathlib import Path
from typing import Callable, List

import pytest

from hurwitz.core.logging import configure_logging
from hurwitz.schemas.caps import Caps
from hurwitz.services.braidcore import ClassSubset
from hurwitz.services.permcore import Permutation, PermutationGroup, build_group, parse_cycles


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    configure_logging("WARNING")


def perm(text: str, degree: int) -> Permutation:
    return parse_cycles(text, degree)


def cyclic_generator(n: int) -> Permutation:
    return Permutation([(i + 1) % n for i in range(n)])


def cyclic_group(n: int) -> PermutationGroup:
    return build_group([cyclic_generator(n)])


def nonidentity(group: PermutationGroup, caps: Caps) -> List[Permutation]:
    return [g for g in group.elements(caps.max_elements) if not g.is_identity]


@pytest.fixture
def caps() -> Caps:
    return Caps(max_orbit=200_000, max_cosets=200_000, max_elements=50_000, max_nodes=200_000)


@pytest.fixture
def z2() -> PermutationGroup:
    return cyclic_group(2)


@pytest.fixture
def z3() -> PermutationGroup:
    return cyclic_group(3)


@pytest.fixture
def z5() -> PermutationGroup:
    return cyclic_group(5)


@pytest.fixture
def z6() -> PermutationGroup:
    return cyclic_group(6)


@pytest.fixture
def v4() -> PermutationGroup:
    return build_group([perm("(1, 2)(3, 4)", 4), perm("(1, 3)(2, 4)", 4)])


@pytest.fixture
def s3() -> PermutationGroup:
    return build_group([perm("(1, 2)", 3), perm("(1, 2, 3)", 3)])


@pytest.fixture
def d4() -> PermutationGroup:
    return build_group([perm("(1, 2, 3, 4)", 4), perm("(1, 3)", 4)])


@pytest.fixture
def a4() -> PermutationGroup:
    return build_group([perm("(1, 2, 3)", 4), perm("(2, 3, 4)", 4)])


@pytest.fixture
def s4() -> PermutationGroup:
    return build_group([perm("(1, 2)", 4), perm("(1, 2, 3, 4)", 4)])


@pytest.fixture
def s3_transpositions(s3: PermutationGroup, caps: Caps) -> ClassSubset:
    return ClassSubset(s3, [g for g in s3.elements(caps.max_elements) if g.order == 2], caps)


@pytest.fixture
def z3_nonidentity(z3: PermutationGroup, caps: Caps) -> ClassSubset:
    return ClassSubset(z3, nonidentity(z3, caps), caps)


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, dict], str]:
    def write(name: str, payload: dict) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
