import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathstat.errors import ParameterError
from wreathstat.perm import (
    ColoredPermutation,
    GroupSpec,
    compose,
    csum,
    cycle_lengths,
    cycles,
    exc_a,
    exc_a_set,
    exc_clr,
    exc_full,
    fix_count,
    inverse,
    is_member,
    order_divides,
    power,
    stats,
)

from conftest import all_elements

ID = ColoredPermutation.identity


@st.composite
def elements(draw, r=None, n=None):
    r = draw(st.integers(1, 4)) if r is None else r
    n = draw(st.integers(0, 5)) if n is None else n
    tau = draw(st.permutations(range(1, n + 1)))
    z = draw(st.lists(st.integers(0, r - 1), min_size=n, max_size=n))
    return ColoredPermutation(r, tuple(z), tuple(tau))


@st.composite
def triples(draw):
    r = draw(st.integers(1, 4))
    n = draw(st.integers(0, 5))
    return tuple(draw(elements(r, n)) for _ in range(3))


class TestConstruction:
    def test_rejects_bad_colors(self):
        with pytest.raises(ParameterError):
            ColoredPermutation(2, (0, 2), (1, 2))

    def test_rejects_non_permutation(self):
        with pytest.raises(ParameterError):
            ColoredPermutation(2, (0, 0), (1, 1))

    def test_empty_identity(self):
        e = ID(3, 0)
        assert e.is_identity()
        assert stats(e).fix == 0 and exc_full(e) == 0

    def test_parse_and_display_roundtrip(self):
        sigma = ColoredPermutation(3, (1, 2, 1, 2), (3, 1, 2, 4))
        assert str(sigma) == "3^[1] 1^[2] 2^[1] 4^[2]"
        assert ColoredPermutation.parse(str(sigma), 3) == sigma

    def test_parse_plain_digit_is_uncolored(self, star_g33):
        assert ColoredPermutation.parse("2 1^[1] 3^[2]", 3) == star_g33

    def test_groupspec_requires_divisor(self):
        with pytest.raises(ParameterError):
            GroupSpec(4, 3, 2, 2)


class TestCompose:
    def test_identity_left(self):
        sigma = ColoredPermutation(3, (1, 0, 2, 1), (2, 4, 1, 3))
        assert compose(ID(3, 4), sigma) == sigma

    def test_color_flip_squares_to_identity(self):
        flip = ColoredPermutation(2, (1,), (1,))
        assert compose(flip, flip).is_identity()

    def test_worked_product_g32(self):
        a = ColoredPermutation(3, (1, 0), (2, 1))
        b = ColoredPermutation(3, (0, 2), (2, 1))
        # z_1 = 1 + b.z_2 = 0, z_2 = 0 + b.z_1 = 0, tau = id
        got = compose(a, b)
        assert got == ColoredPermutation(3, (0, 0), (1, 2))
        a_inv = {t: i for i, t in enumerate(a.tau, 1)}
        assert got.z == tuple((a.z[i - 1] + b.z[a_inv[i] - 1]) % 3 for i in (1, 2))

    def test_mismatch_raises(self):
        with pytest.raises(ParameterError):
            compose(ID(2, 3), ID(3, 3))
        with pytest.raises(ParameterError):
            compose(ID(2, 3), ID(2, 2))

    @given(triples())
    def test_associative(self, abc):
        a, b, c = abc
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(st.integers(1, 4).flatmap(lambda r: st.tuples(elements(r, 4), elements(r, 4))))
    def test_permutation_part_composes(self, ab):
        a, b = ab
        assert compose(a, b).tau == tuple(a.tau[t - 1] for t in b.tau)

    @given(st.integers(1, 4).flatmap(lambda r: st.tuples(elements(r, 4), elements(r, 4))))
    def test_csum_homomorphism_mod_r(self, ab):
        a, b = ab
        assert (csum(compose(a, b)) - csum(a) - csum(b)) % a.r == 0

    @settings(max_examples=60)
    @given(elements())
    def test_inverse(self, a):
        assert compose(a, inverse(a)).is_identity()
        assert compose(inverse(a), a).is_identity()


class TestPower:
    def test_first_power(self):
        sigma = ColoredPermutation(3, (1, 2, 0), (3, 1, 2))
        assert power(sigma, 1) == sigma
        assert power(sigma, 0) == ID(3, 3)

    def test_flip_squared(self):
        assert power(ColoredPermutation(2, (1,), (1,)), 2).is_identity()

    @pytest.mark.parametrize("colors", [(0, 0, 0), (1, 2, 2), (2, 2, 0), (1, 1, 1)])
    def test_cubed_three_cycle_carries_color_sum(self, colors):
        sigma = ColoredPermutation(3, colors, (2, 3, 1))
        cube = compose(compose(sigma, sigma), sigma)
        assert cube == power(sigma, 3)
        assert cube.tau == (1, 2, 3)
        assert cube.z == (sum(colors) % 3,) * 3

    def test_negative_exponent(self):
        with pytest.raises(ParameterError):
            power(ID(2, 2), -1)


class TestOrderDivides:
    def test_identity(self):
        assert all(order_divides(ID(3, 3), m) for m in range(1, 7))

    def test_transposition(self):
        t = ColoredPermutation(1, (0, 0), (2, 1))
        assert order_divides(t, 2)
        assert not order_divides(t, 3)

    def test_color_quarter_turn(self):
        sigma = ColoredPermutation(4, (1,), (1,))
        assert not order_divides(sigma, 2)
        assert order_divides(sigma, 4)

    @pytest.mark.parametrize("r,n", [(1, 4), (2, 4), (3, 3), (3, 4)])
    def test_matches_cycle_criterion(self, r, n):
        for sigma in all_elements(r, n):
            for m in range(1, 7):
                by_cycles = all(
                    m % len(c) == 0 and (sum(sigma.z[i - 1] for i in c) * (m // len(c))) % r == 0
                    for c in cycles(sigma)
                )
                assert order_divides(sigma, m) == by_cycles, (sigma, m)


class TestStatistics:
    def test_csum(self, paper_g34, star_g33):
        assert csum(ID(3, 4)) == 0
        assert csum(paper_g34) == 5
        assert csum(star_g33) == 3

    def test_fix(self, paper_g34):
        assert fix_count(ID(2, 5)) == 5
        assert fix_count(paper_g34) == 2
        assert fix_count(ColoredPermutation(2, (1, 0, 1, 1), (2, 3, 4, 1))) == 0

    def test_exc_a_star_element(self, star_g33):
        assert exc_a_set(star_g33) == {1}
        assert exc_a(ID(3, 3)) == 0

    def test_exc_a_g34_example(self, paper_g34):
        # tau(3) = 2 < 3 and positions 1, 2 carry colored images: nothing qualifies.
        assert exc_a_set(paper_g34) == set()

    def test_exc_full_star_element(self, star_g33):
        assert exc_full(star_g33) == 6
        assert exc_clr(star_g33) == 6

    def test_exc_full_g34_example(self, paper_g34):
        # counted letter by letter: 1^[2], 2^[1], 2^[2], 4^[1], 4^[2] rise
        assert exc_full(paper_g34) == 5
        assert exc_clr(paper_g34) == 3 * 0 + 5

    def test_identity_has_no_excedances(self):
        assert exc_full(ID(4, 3)) == 0
        assert exc_clr(ID(4, 3)) == 0

    @given(elements(r=1))
    def test_single_color_is_classical_excedance(self, sigma):
        assert exc_full(sigma) == sum(1 for i, t in enumerate(sigma.tau, 1) if t > i)

    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_exc_full_equals_exc_clr(self, r, n):
        for sigma in all_elements(r, n):
            assert exc_full(sigma) == exc_clr(sigma), sigma

    @given(elements())
    def test_exc_a_inside_uncolored_excedances(self, sigma):
        plain = {i for i, t in enumerate(sigma.tau, 1) if t > i and i < sigma.n}
        assert exc_a_set(sigma) <= plain

    @given(elements())
    def test_stat_bounds(self, sigma):
        t = stats(sigma)
        assert t.fix <= sigma.n
        assert t.exc_a <= max(sigma.n - 1, 0)
        assert t.csum <= sigma.n * (sigma.r - 1)


class TestMembership:
    def test_identity_member(self):
        assert is_member(ID(6, 3), 3)

    def test_g34_example_not_in_g334(self, paper_g34):
        assert not is_member(paper_g34, 3)

    def test_color_sum_three(self):
        assert is_member(ColoredPermutation(3, (1, 2), (1, 2)), 3)

    def test_bad_divisor(self):
        with pytest.raises(ParameterError):
            is_member(ID(4, 2), 3)


class TestCycles:
    def test_identity(self):
        assert cycle_lengths(ID(2, 3)) == {1: 3}

    def test_g34_example(self, paper_g34):
        assert cycle_lengths(paper_g34) == {1: 2, 2: 1}

    def test_long_cycle(self):
        assert cycle_lengths(ColoredPermutation(1, (0,) * 5, (2, 3, 4, 5, 1))) == {5: 1}
