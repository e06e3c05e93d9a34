import itertools

import pytest

from hurwitz.core.exceptions import InputError
from hurwitz.services.braidcore import (
    ClassSubset,
    GTuple,
    component_of,
    enumerate_components,
    identity_component,
    tuple_product,
)
from hurwitz.services.galois import make_context
from hurwitz.services.monoid import (
    MonoidService,
    build_v,
    build_v_tuple,
    is_complete_class_set,
    reduction_bounds,
    subgroup_lattice,
)
from hurwitz.services.permcore import build_group, power
from tests.conftest import cyclic_generator, nonidentity, perm

pytestmark = pytest.mark.unit


def t(degree: int, *texts: str) -> GTuple:
    return GTuple(degree, tuple(perm(text, degree) for text in texts))


def klein_square() -> GTuple:
    a, b = "(1, 2)(3, 4)", "(1, 3)(2, 4)"
    return t(4, a, a, b, b)


@pytest.fixture
def service(caps):
    return MonoidService(caps)


class TestNi:
    def test_single_generating_factor(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"), caps)
        assert service.ni_set(service.query([x])) == [x]

    def test_transposition_squares(self, service, s3, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        found = service.ni_set(service.query([x, x], group=s3))
        assert len(found) == 4
        assert sum(1 for z in found if z.monodromy.order == 6) == 1

    def test_sharp_keeps_monodromy(self, service, s3, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        found = service.ni_set(service.query([x, x], group=s3, sharp=True))
        assert found == [component_of(t(3, *["(1, 2)"] * 4), caps)]

    def test_factor_outside_h(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        h = build_group([perm("(1, 2, 3)", 3)])
        with pytest.raises(InputError):
            service.query([x], group=h)

    def test_needs_factors(self, service):
        with pytest.raises(InputError):
            service.query([])


class TestPermuting:
    def test_same_group(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"), caps)
        y = component_of(t(3, "(1, 2)", "(2, 3)", "(1, 2)", "(1, 3)"), caps)
        assert service.are_permuting(x, y)

    def test_v4_and_three_cycle(self, service, caps):
        x = component_of(klein_square(), caps)
        y = component_of(t(4, "(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"), caps)
        assert service.are_permuting(x, y)

    def test_two_transpositions(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        y = component_of(t(3, "(1, 3)", "(1, 3)"), caps)
        assert not service.are_permuting(x, y)

    def test_family_of_two_agrees_with_pair(self, service, caps):
        pairs = [
            (t(3, "(1, 2)", "(1, 2)"), t(3, "(1, 3)", "(1, 3)")),
            (t(3, "(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"), t(3, "(1, 2)", "(1, 2)")),
        ]
        for a, b in pairs:
            x, y = component_of(a, caps), component_of(b, caps)
            assert service.is_permuting_family([x, y]) == service.are_permuting(x, y)

    def test_equal_groups_family(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)", "(1, 3)", "(1, 3)"), caps)
        assert service.is_permuting_family([x, x, x])

    def test_v4_and_two_three_cycles(self, service, caps):
        x = component_of(klein_square(), caps)
        y = component_of(t(4, "(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"), caps)
        # V4 正规于 A4，每个 V4·⟨共轭⟩ 都是群
        assert service.is_permuting_family([x, y, y])


class TestSingleton:
    def test_permuting_pair(self, service, caps):
        x = component_of(t(3, "(1, 2, 3)", "(1, 2, 3)", "(1, 2, 3)"), caps)
        y = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        assert service.are_permuting(x, y)
        verdict = service.verify_singleton(service.query([x, y]))
        assert verdict.holds
        assert verdict.witness == ()
        assert verdict.product == service.product([x, y])

    @pytest.mark.slow
    @pytest.mark.parametrize("group_name", ["z6", "s3", "d4", "a4"])
    def test_permuting_pairs_are_singletons(self, group_name, request, service, caps):
        group = request.getfixturevalue(group_name)
        subset = ClassSubset(group, nonidentity(group, caps), caps)
        components = [
            x
            for n in range(1, 4)
            for x in enumerate_components(subset, n, caps, index=service.index)
        ]
        for x in components:
            for y in components:
                if service.are_permuting(x, y):
                    assert service.verify_singleton(service.query([x, y])).holds

    @pytest.mark.slow
    @pytest.mark.parametrize("group_name", ["z6", "s3", "d4", "a4"])
    def test_permuting_triples_are_singletons(self, group_name, request, service, caps):
        group = request.getfixturevalue(group_name)
        subset = ClassSubset(group, nonidentity(group, caps), caps)
        components = [
            x
            for n in range(1, 3)
            for x in enumerate_components(subset, n, caps, index=service.index)
        ]
        checked = 0
        for family in itertools.product(components, repeat=3):
            if service.is_permuting_family(list(family)):
                assert service.verify_singleton(service.query(list(family))).holds
                checked += 1
        assert checked > 0


class TestFactor:
    def test_small_component_untouched(self, service, caps):
        x = component_of(t(3, *["(1, 2)"] * 6), caps)
        result = service.factor_small(x, 13)
        assert result.prefix == ()
        assert result.remainder == x

    def test_z2_block(self, service, caps):
        g = cyclic_generator(2)
        x = component_of(GTuple(2, (g,) * 4), caps)
        result = service.factor_small(x, 3)
        assert result.prefix == ((g, 2),)
        assert result.remainder == component_of(GTuple(2, (g, g)), caps)
        assert service.reconstitute(result) == x

    def test_reconstitution(self, service, caps):
        x = component_of(
            t(3, *["(1, 2)"] * 4, "(1, 3)", "(1, 3)", "(2, 3)", "(2, 3)"),
            caps,
        )
        result = service.factor_small(x, 3)
        assert service.reconstitute(result) == x


class TestBounds:
    def test_z2(self, z2, caps):
        subset = ClassSubset(z2, nonidentity(z2, caps), caps)
        assert reduction_bounds(subset, caps) == (6, 3)

    def test_s3(self, s3_transpositions, caps):
        coarse, refined = reduction_bounds(s3_transpositions, caps)
        assert coarse == 78
        assert refined == 21


class TestV:
    def test_z2(self, z2, caps):
        v = build_v(ClassSubset(z2, nonidentity(z2, caps), caps), caps)
        assert v.degree == 2

    def test_z3(self, z3_nonidentity, caps):
        v = build_v(z3_nonidentity, caps)
        assert v.degree == 6
        r = cyclic_generator(3)
        assert sorted(v.entries) == sorted([r] * 3 + [power(r, 2)] * 3)

    def test_s3_tuple(self, s3, caps):
        entries = nonidentity(s3, caps)
        v = build_v_tuple(entries, 3)
        assert v.degree == 12
        assert tuple_product(v).is_identity

    def test_construction_order_irrelevant(self, s3_transpositions, caps):
        forward = build_v(s3_transpositions, caps)
        backward = build_v(
            s3_transpositions, caps, order=list(reversed(s3_transpositions.elements))
        )
        assert backward == forward
        assert forward.degree == 6
        assert forward.monodromy.order == 6

    def test_order_must_cover_c(self, z3_nonidentity, caps):
        with pytest.raises(InputError):
            build_v(z3_nonidentity, caps, order=[cyclic_generator(3)])


class TestCompleteness:
    def test_nonidentity_is_complete(self, s3, v4, caps):
        for group in (s3, v4):
            subset = ClassSubset(group, nonidentity(group, caps), caps)
            assert is_complete_class_set(subset, caps)

    def test_transpositions_are_not(self, s3_transpositions, caps):
        assert not is_complete_class_set(s3_transpositions, caps)

    def test_trivial_group(self, caps):
        trivial = build_group([], degree=2)
        assert is_complete_class_set(ClassSubset(trivial, [], caps), caps)

    def test_lattice_sizes(self, s3, s4, caps):
        assert len(subgroup_lattice(s3, caps)) == 6
        assert len(subgroup_lattice(s4, caps)) == 30


class TestRationalProducts:
    def test_transposition_pair(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        found = service.rational_products(x, x, make_context(2))
        assert found == [component_of(t(3, *["(1, 2)"] * 4), caps)]

    def test_identity_factor(self, service, caps):
        x = component_of(t(3, "(1, 2)", "(1, 2)"), caps)
        e = identity_component(3)
        assert service.rational_products(x, e, make_context(2)) == [x]
