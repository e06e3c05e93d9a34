import pytest

from hurwitz.core.exceptions import NotAbelian, NotAUnit, NotAUnitSubgroup, PowerLeavesC
from hurwitz.services.braidcore import (
    ClassSubset,
    GTuple,
    component_of,
    concat,
    enumerate_components,
    multidiscriminant,
)
from hurwitz.services.galois import (
    Ambiguous,
    Determined,
    abelian_action,
    act_multidiscriminant,
    class_power_map,
    cyclotomic_block,
    galois_norm_abelian,
    is_defined_over_abelian,
    is_rational_multidiscriminant,
    is_rational_subset,
    make_context,
    rational_branch_point_count,
    rational_closure,
    resolve_action,
)
from hurwitz.services.permcore import Permutation, power
from tests.conftest import cyclic_generator, cyclic_group, nonidentity, perm

pytestmark = pytest.mark.unit


def cyclic_component(n: int, exponents, caps):
    """Z/n 中的元组 (r^a_1, …)"""
    r = cyclic_generator(n)
    return component_of(GTuple(n, tuple(power(r, a) for a in exponents)), caps)


class TestContexts:
    def test_full(self):
        assert make_context(3).units == (1, 2)
        assert make_context(12).units == (1, 5, 7, 11)

    def test_trivial(self):
        assert make_context(7, "trivial").units == (1,)

    def test_explicit(self):
        ctx = make_context(8, "explicit", [1, 3])
        assert ctx.units == (1, 3)
        assert 11 in ctx

    def test_modulus_one(self):
        assert make_context(1).units == (1,)

    @pytest.mark.parametrize("units", [[3], [1, 2], [1, 3, 5]])
    def test_explicit_rejects_non_subgroups(self, units):
        with pytest.raises(NotAUnitSubgroup):
            make_context(8, "explicit", units)

    def test_explicit_not_closed(self):
        with pytest.raises(NotAUnitSubgroup):
            make_context(7, "explicit", [1, 2])


class TestRationalSubsets:
    def test_involutions(self, s4, caps):
        involutions = [g for g in s4.elements(caps.max_elements) if g.order == 2]
        assert is_rational_subset(involutions, make_context(12))

    def test_whole_group(self, a4, caps):
        elements = a4.elements(caps.max_elements)
        ctx = make_context(6)
        assert is_rational_subset(elements, ctx)
        assert is_rational_subset(nonidentity(a4, caps), ctx)

    def test_single_generator_of_z3(self):
        assert not is_rational_subset([cyclic_generator(3)], make_context(3))
        assert is_rational_subset([cyclic_generator(3)], make_context(3, "trivial"))

    def test_rational_closure(self, a4, caps):
        subset = rational_closure(a4, [perm("(1, 2, 3)", 4)], caps)
        assert len(subset.elements) == 8
        assert len(subset.class_ids) == 2


class TestPowerMaps:
    def test_identity_unit(self, z3_nonidentity):
        assert class_power_map(z3_nonidentity, 1) == {1: 1, 2: 2}

    def test_swap(self, z3_nonidentity):
        assert class_power_map(z3_nonidentity, 2) == {1: 2, 2: 1}

    def test_odd_power_of_involutions(self, s3_transpositions):
        assert class_power_map(s3_transpositions, 5) == {1: 1}

    def test_power_leaving_c(self, z3, caps):
        subset = ClassSubset(z3, [cyclic_generator(3)], caps)
        with pytest.raises(PowerLeavesC):
            class_power_map(subset, 2)

    def test_act_multidiscriminant(self, z3_nonidentity, caps):
        psi = multidiscriminant(cyclic_component(3, [1, 1, 1], caps).canonical, z3_nonidentity)
        assert act_multidiscriminant(psi, 1, z3_nonidentity) == psi
        assert act_multidiscriminant(psi, 2, z3_nonidentity).as_dict() == {1: 0, 2: 3}

    def test_rational_multidiscriminant(self, z3_nonidentity, s3_transpositions, caps):
        x = cyclic_component(3, [1, 1, 1], caps)
        assert not is_rational_multidiscriminant(x, z3_nonidentity, make_context(3))
        assert is_rational_multidiscriminant(x, z3_nonidentity, make_context(3, "trivial"))
        for y in enumerate_components(s3_transpositions, 4, caps):
            assert is_rational_multidiscriminant(y, s3_transpositions, make_context(6))


class TestAbelianAction:
    def test_unit_one(self, caps):
        x = cyclic_component(5, [1, 1, 3], caps)
        assert abelian_action(x, 1, caps) == x

    def test_inverse_power(self, caps):
        x = cyclic_component(5, [1, 1, 3], caps)
        assert abelian_action(x, 2, caps) == cyclic_component(5, [3, 3, 4], caps)

    def test_fixed_pair(self, caps):
        x = cyclic_component(6, [1, 5], caps)
        for k in (1, 5):
            assert abelian_action(x, k, caps) == x

    def test_non_unit(self, caps):
        with pytest.raises(NotAUnit):
            abelian_action(cyclic_component(6, [1, 5], caps), 2, caps)

    def test_non_abelian(self, caps):
        x = component_of(GTuple(3, (perm("(1, 2)", 3),) * 2 + (perm("(1, 3)", 3),) * 2), caps)
        with pytest.raises(NotAbelian):
            abelian_action(x, 1, caps)

    def test_defined_over_q(self, caps):
        triple = cyclic_component(3, [1, 1, 1], caps)
        assert not is_defined_over_abelian(triple, make_context(3), caps)
        pair = cyclic_component(5, [1, 4], caps)
        assert not is_defined_over_abelian(pair, make_context(5), caps)
        assert is_defined_over_abelian(cyclic_component(4, [1, 3], caps), make_context(4), caps)

    def test_trivial_context(self, caps):
        x = cyclic_component(7, [1, 2, 4], caps)
        assert is_defined_over_abelian(x, make_context(7, "trivial"), caps)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_pair_rationality(self, n, caps):
        x = cyclic_component(n, [1, n - 1], caps)
        assert is_defined_over_abelian(x, make_context(n), caps) == (n in {2, 3, 4, 6})


class TestNorm:
    def test_rational_component(self, caps):
        x = cyclic_component(4, [1, 3], caps)
        assert galois_norm_abelian(x, make_context(4), caps) == x

    def test_z3_triple(self, caps):
        x = cyclic_component(3, [1, 1, 1], caps)
        norm = galois_norm_abelian(x, make_context(3), caps)
        assert norm == concat(x, cyclic_component(3, [2, 2, 2], caps), caps)
        assert norm.degree == 6
        assert is_defined_over_abelian(norm, make_context(3), caps)

    def test_z5_pair(self, caps):
        x = cyclic_component(5, [1, 4], caps)
        norm = galois_norm_abelian(x, make_context(5), caps)
        assert norm.degree == 4
        assert norm == concat(x, cyclic_component(5, [2, 3], caps), caps)


class TestResolveAction:
    def test_unit_one(self, caps):
        x = cyclic_component(3, [1, 1, 1], caps)
        assert resolve_action(x, 1, caps) == Determined(x)

    def test_agrees_with_abelian_action_z3(self, z3_nonidentity, caps):
        for n in range(1, 5):
            for x in enumerate_components(z3_nonidentity, n, caps):
                resolution = resolve_action(x, 2, caps)
                assert isinstance(resolution, Determined)
                assert resolution.component == abelian_action(x, 2, caps)

    def test_transposition_components_are_fixed(self, s3_transpositions, caps):
        for n in (2, 4):
            for x in enumerate_components(s3_transpositions, n, caps):
                for k in (1, 5):
                    assert resolve_action(x, k, caps) == Determined(x)

    def test_explicit_subset_z7(self, caps):
        z7 = cyclic_group(7)
        r = cyclic_generator(7)
        subset = ClassSubset(z7, [r, power(r, 6)], caps)
        for n in (2, 4):
            for x in enumerate_components(subset, n, caps):
                resolution = resolve_action(x, 6, caps, subset=subset)
                assert resolution == Determined(abelian_action(x, 6, caps))

    def test_ambiguous_type(self):
        assert Ambiguous(()).candidates == ()


class TestCyclotomicBlocks:
    def test_blocks(self):
        assert cyclotomic_block(Permutation.identity(3)).degree == 0
        t = perm("(1, 2)", 3)
        assert cyclotomic_block(t).entries == (t, t)
        r = cyclic_generator(5)
        assert cyclotomic_block(r).degree == 4

    def test_blocks_are_rational_components(self, caps):
        for n in (3, 4, 5, 6):
            block = component_of(cyclotomic_block(cyclic_generator(n)), caps)
            assert is_defined_over_abelian(block, make_context(n), caps)

    def test_branch_point_count(self):
        order_three = [perm("(1, 2, 3)", 4), perm("(2, 3, 4)", 4)]
        assert rational_branch_point_count(order_three) == 4
        order_six = [perm("(1, 2, 3)(4, 5)", 5), perm("(1, 2)", 5)]
        assert rational_branch_point_count(order_six) == 4
