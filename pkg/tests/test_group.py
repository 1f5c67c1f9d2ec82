import random

import pytest

from conftest import cw, star
from repetend import config
from repetend.errors import CapacityError
from repetend.group import (
    GroupElement,
    StarElement,
    circular_carry_add,
    circular_product_expanded,
    single_letter_multiplier,
)
from repetend.numtheory import multiplicative_order
from repetend.oracle import Fraction
from repetend.words import CircularWord


def g(text, base=10):
    return GroupElement(cw(text, base))


class TestGroupAddition:
    def test_carry_wraps_around(self):
        assert g("754") + g("523") == g("278")  # 1277 = 999 + 278

    def test_neutral_element(self):
        x = g("614")
        assert x + g("000") == x

    def test_complement_pair_collapses(self):
        assert g("54") + g("45") == g("00")

    def test_all_beta_stored_as_zero(self):
        assert g("99") == g("00")

    def test_mismatches_rejected(self):
        with pytest.raises(ValueError):
            g("12") + g("123")
        with pytest.raises(ValueError):
            g("12") + g("12", base=7)


class TestDigitwiseCrossCheck:
    @pytest.mark.parametrize("base,length", [(2, 4), (3, 3), (10, 2)])
    def test_agrees_with_modular_route_exhaustively(self, base, length):
        modulus = base**length - 1
        for n1 in range(modulus):
            x = CircularWord.from_int(n1, base, length)
            for n2 in range(modulus):
                y = CircularWord.from_int(n2, base, length)
                digitwise = GroupElement(circular_carry_add(x, y))
                assert digitwise == GroupElement(x) + GroupElement(y)

    def test_boundary_sum_yields_all_beta_word(self):
        raw = circular_carry_add(cw("54"), cw("45"))
        assert raw == cw("99")  # no carry leaves the word

    def test_overshoot_wraps(self):
        assert circular_carry_add(cw("754"), cw("523")) == cw("278")


class TestGroupAxioms:
    def test_abelian_group_exhaustive(self):
        base, length = 2, 4  # 15 elements
        modulus = base**length - 1
        elements = [GroupElement.from_int(n, base, length) for n in range(modulus)]
        zero = elements[0]
        for x in elements:
            assert x + zero == x
            assert x + (-x) == zero
            for y in elements:
                assert x + y == y + x
                for z in elements:
                    assert (x + y) + z == x + (y + z)

    def test_valuation_is_isomorphism(self):
        rng = random.Random(7)
        for _ in range(200):
            length = rng.randint(1, 9)
            base = rng.choice([2, 3, 7, 10])
            modulus = base**length - 1
            n1, n2 = rng.randrange(modulus), rng.randrange(modulus)
            total = GroupElement.from_int(n1, base, length) + GroupElement.from_int(
                n2, base, length
            )
            assert total.word.valuation == (n1 + n2) % modulus

    def test_shift_is_multiplication_by_base(self):
        x = g("1402")
        modulus = 10**4 - 1
        assert x.shift(1).word.valuation == 10 * x.word.valuation % modulus


class TestNegation:
    def test_digit_complement(self):
        assert -g("627") == g("372")

    def test_zero(self):
        assert -g("00") == g("00")

    def test_base_seven(self):
        assert -g("15", base=7) == g("51", base=7)


class TestStarAddition:
    def test_lifted_sum(self):
        assert star("54") + star("627") == star("173082")

    def test_neutral(self):
        assert star("3") + star("0") == star("3")

    def test_complement_to_zero(self):
        assert star("3") + star("6") == star("0")

    def test_result_is_primitive(self):
        total = star("12") + star("21")  # 12 + 21 = 33 -> 3~
        assert total == star("3")

    def test_capacity(self):
        config.period_cap = 10
        with pytest.raises(CapacityError):
            star("1234567") + star("12345678")


class TestCircularProduct:
    def test_two_digit_by_single_digit(self):
        assert star("12") * star("4") == star("053872")

    def test_four_squared(self):
        assert star("4") * star("4") == star("197530864")

    def test_square_of_zero_one(self):
        product = star("01") * star("01")
        digits = str(product.representative)
        assert len(digits) == 198
        assert digits == "".join(f"{k:02d}" for k in range(98)) + "99"

    def test_beta_is_neutral_zero_absorbing(self):
        x = star("053872")
        assert x * star("9") == x
        assert x * star("0") == star("0")
        assert star("9") * star("9") == star("9")

    def test_multiplier_base_ten(self):
        assert single_letter_multiplier(10) == 12345679

    def test_multiplier_consistency(self):
        for base in range(2, 12):
            expected = 1 + sum((base - i - 2) * base**i for i in range(base - 2))
            assert single_letter_multiplier(base) == expected

    @pytest.mark.parametrize("base", range(2, 11))
    def test_expanded_route_single_letters(self, base):
        for p in range(base):
            for q in range(base):
                x = StarElement.of(CircularWord((p,), base))
                y = StarElement.of(CircularWord((q,), base))
                assert x * y == circular_product_expanded(x, y)

    def test_expanded_route_two_digit_pairs(self):
        rng = random.Random(11)
        for _ in range(25):
            x = StarElement.of(CircularWord.from_int(rng.randrange(99), 10, 2))
            y = StarElement.of(CircularWord.from_int(rng.randrange(99), 10, 2))
            assert x * y == circular_product_expanded(x, y)

    def test_agrees_with_fraction_oracle(self):
        rng = random.Random(13)
        for base in (2, 3, 7, 10):
            for _ in range(40):
                ell1, ell2 = rng.randint(1, 4), rng.randint(1, 4)
                n1 = rng.randrange(base**ell1 - 1)
                n2 = rng.randrange(base**ell2 - 1)
                x = StarElement.of(CircularWord.from_int(n1, base, ell1))
                y = StarElement.of(CircularWord.from_int(n2, base, ell2))
                product = x * y
                m = base ** len(product.representative) - 1
                lhs = Fraction(n1, base**ell1 - 1) * Fraction(n2, base**ell2 - 1)
                assert lhs == Fraction(product.representative.valuation, m)

    def test_capacity(self):
        config.period_cap = 50
        with pytest.raises(CapacityError):
            star("0000001") * star("00000001")


class TestOrderPSubgroups:
    """A nontrivial element of additive order p exists in some fixed
    length iff the base and p share no factor."""

    @pytest.mark.parametrize("base,p", [(2, 3), (2, 7), (3, 11), (10, 3), (10, 7)])
    def test_exists_when_coprime(self, base, p):
        ell = multiplicative_order(base, p)
        modulus = base**ell - 1
        assert modulus % p == 0
        generator = GroupElement.from_int(modulus // p, base, ell)
        zero = GroupElement.from_int(0, base, ell)
        acc = zero
        for k in range(1, p):
            acc = acc + generator
            assert acc != zero
        assert acc + generator == zero

    @pytest.mark.parametrize("base,p", [(10, 2), (10, 5), (6, 3), (4, 2)])
    def test_absent_when_sharing_a_factor(self, base, p):
        for ell in range(1, 13):
            assert (base**ell - 1) % p != 0


class TestMidScaleExhaustive:
    """Exhaustive sweeps at a modulus around the spec'd testable scale."""

    def test_commutativity_neutral_inverse_base3_length4(self):
        base, length = 3, 4  # modulus 80
        modulus = base**length - 1
        elements = [GroupElement.from_int(n, base, length) for n in range(modulus)]
        zero = elements[0]
        for x in elements:
            assert x + zero == x
            assert x + (-x) == zero
        for i, x in enumerate(elements):
            for y in elements[i:]:
                assert x + y == y + x

    def test_associativity_sampled_at_scale(self):
        base, length = 10, 4  # modulus 9999
        rng = random.Random(41)
        for _ in range(300):
            x = GroupElement.from_int(rng.randrange(9999), base, length)
            y = GroupElement.from_int(rng.randrange(9999), base, length)
            z = GroupElement.from_int(rng.randrange(9999), base, length)
            assert (x + y) + z == x + (y + z)
