import pytest

from hurwitz.core.exceptions import UnknownExample
from hurwitz.services.examples import run_example, transposition_rationality_example

pytestmark = pytest.mark.integration


@pytest.mark.slow
def test_m23(caps):
    results = run_example("m23", caps)
    assert results["order"] == 10_200_960
    assert results["order_second_base"] == results["order"]
    assert results["transitive"] is True
    assert results["generator_orders"] == [3, 3]
    assert results["conjugate"] is True
    assert results["rational_branch_points"] == 4


def test_psl2_16(caps):
    results = run_example("psl2-16", caps)
    assert results["order"] == 8160
    assert results["order_second_base"] == 8160
    assert results["degree"] == 17
    assert results["generator_orders"] == [6, 6]
    assert results["rational_branch_points"] == 4


def test_cyclic_rationality(caps):
    results = run_example("cyclic-rationality", caps)
    assert results["defined_for"] == [2, 3, 4, 6]
    assert results["triple_z3_defined_over_q"] is False
    assert [row["n"] for row in results["pair_table"]] == list(range(2, 13))


def test_transposition_rationality_s3(caps):
    rows = transposition_rationality_example(caps, {3: 6})["rows"]
    assert [row["components"] for row in rows] == [3, 4, 4]
    assert all(row["determined_by_group_and_multidiscriminant"] for row in rows)
    assert all(row["multidiscriminants_rational"] for row in rows)


def test_transposition_rationality_s4_uses_monodromy_classes(caps):
    # ((3 4)^4, (1 2)^2) 与 ((3 4)^2, (1 2)^4) 的单值群相同但不辫等价
    rows = transposition_rationality_example(caps, {4: 6})["rows"]
    assert [row["tuple_degree"] for row in rows] == [2, 4, 6]
    assert all(row["determined_by_group_and_multidiscriminant"] for row in rows)


@pytest.mark.slow
def test_transposition_rationality_default(caps):
    rows = run_example("transposition-rationality", caps)["rows"]
    s3_rows = [row for row in rows if row["symmetric_degree"] == 3]
    s4_rows = [row for row in rows if row["symmetric_degree"] == 4]
    assert [row["tuple_degree"] for row in s3_rows] == [2, 4, 6, 8, 10]
    assert [row["components"] for row in s3_rows] == [3, 4, 4, 4, 4]
    assert [row["tuple_degree"] for row in s4_rows] == [2, 4, 6]
    assert all(row["determined_by_group_and_multidiscriminant"] for row in rows)
    assert all(row["multidiscriminants_rational"] for row in rows)


def test_complete_v(caps):
    rows = {row["group"]: row for row in run_example("complete-v", caps)["rows"]}
    assert rows["Z/3"]["degree"] == 6
    assert rows["V4"]["degree"] == 6
    for row in rows.values():
        assert row["complete"] is True
        assert row["monodromy_is_group"] is True
        assert row["defined_over_q"] is True


def test_unknown_example(caps):
    with pytest.raises(UnknownExample):
        run_example("nonexistent", caps)
