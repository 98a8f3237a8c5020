import pytest
from fractions import Fraction
from config import ResourceCapExceeded, resource_caps
from services.cyclo import (
    I,
    ONE,
    CycloNum,
    gauss_half,
    gauss_sum,
    i_sqrt_odd,
    is_p_integral,
    make_root_of_unity,
    parse,
    sqrt_int,
    sqrt_rational,
)


@pytest.fixture
def zeta5():
    """A primitive 5th root of unity"""
    return make_root_of_unity(5, 1)


class TestArithmetic:
    """Tests for field operations on CycloNum"""

    def test_i_squared(self):
        """Test that i^2 = -1"""
        assert I * I == -1

    def test_roots_lift_between_conductors(self):
        """Test zeta_3 equals zeta_12^4 after lifting"""
        assert make_root_of_unity(3, 1) == make_root_of_unity(12, 4)

    def test_conductor_two_mod_four_is_folded(self):
        """Test zeta_6 is stored at conductor 3 as -zeta_3^2"""
        z6 = make_root_of_unity(6, 1)
        assert z6.conductor == 3
        assert z6 == -make_root_of_unity(3, 2)

    def test_roots_of_unity_sum_to_zero(self, zeta5):
        """Test 1 + z + z^2 + z^3 + z^4 = 0 in Q(zeta_5)"""
        total = CycloNum()
        for k in range(5):
            total = total + zeta5 ** k
        assert total.is_zero()

    def test_inverse(self, zeta5):
        """Test x * x^-1 = 1 for a non-rational element"""
        x = ONE + zeta5 * 2
        assert x * x.inverse() == 1
        assert (x / x) == 1

    def test_division_by_zero(self):
        """Test dividing by zero raises ZeroDivisionError"""
        with pytest.raises(ZeroDivisionError):
            ONE / CycloNum()

    def test_conjugate(self):
        """Test complex conjugation sends i to -i"""
        assert I.conjugate() == -I

    def test_rational_scaling(self, zeta5):
        """Test multiplication by a Fraction"""
        assert (zeta5 * Fraction(1, 2)) * 2 == zeta5


class TestSquareRoots:
    """Tests for Gauss sums and square roots"""

    def test_gauss_sum_squares(self):
        """Test g(p)^2 = (-1)^((p-1)/2) p"""
        assert gauss_sum(3) ** 2 == -3
        assert gauss_sum(5) ** 2 == 5
        assert gauss_sum(7) ** 2 == -7

    def test_sqrt_int(self):
        """Test sqrt_int squares back and is positive"""
        for n in (2, 3, 6, 12, 15):
            root = sqrt_int(n)
            assert root * root == n
            assert complex(root).real > 0

    def test_sqrt_rational(self):
        """Test sqrt(3/2)^2 = 3/2"""
        root = sqrt_rational(Fraction(3, 2))
        assert root * root == Fraction(3, 2)

    def test_i_sqrt_odd_against_gauss_sum(self):
        """Test i^((p-1)/2) sqrt(p) is the Gauss sum for p = 1, 3 mod 8 and its negative otherwise"""
        for p in (3, 11, 17, 19):
            assert i_sqrt_odd(p) == gauss_sum(p)
        for p in (5, 7, 13):
            assert i_sqrt_odd(p) == -gauss_sum(p)

    def test_i_sqrt_odd_squares(self):
        """Test (i^((p-1)/2) sqrt(p))^2 = (-1)^((p-1)/2) p"""
        for p in (3, 5, 7, 13):
            assert i_sqrt_odd(p) ** 2 == (-1) ** ((p - 1) // 2) * p

    def test_gauss_half_at_three_is_zeta3(self):
        """Test (-1 + sqrt(-3))/2 is a primitive cube root of unity"""
        assert gauss_half(3, 1) == make_root_of_unity(3, 1)
        assert gauss_half(3, -1) == make_root_of_unity(3, 2)

    def test_sqrt_of_negative_rejected(self):
        """Test square roots of negative values are refused"""
        with pytest.raises(ValueError):
            sqrt_rational(-1)


class TestIntegrality:
    """Tests for p-local integrality"""

    def test_fraction_denominators(self):
        """Test 1/3 is 5-integral but not 3-integral"""
        assert is_p_integral(Fraction(1, 3), 5)
        assert not is_p_integral(Fraction(1, 3), 3)

    def test_gauss_sum_over_p(self):
        """Test g(5)/5 is not 5-integral while g(5) is"""
        assert is_p_integral(gauss_sum(5), 5)
        assert not is_p_integral(gauss_sum(5) / 5, 5)


class TestRendering:
    """Tests for the exact and decimal string forms"""

    def test_rationals_render_plainly(self):
        """Test rational values render as fractions at any conductor"""
        assert CycloNum.from_rational(Fraction(3, 2)).render() == "3/2"
        assert (I * I).render() == "-1"
        assert CycloNum().render() == "0"

    def test_parse_inverts_render(self, zeta5):
        """Test parse reads back the render format"""
        x = ONE + zeta5 ** 3 * Fraction(2, 7)
        assert parse(x.render()) == x

    def test_decimal(self):
        """Test decimal approximation of i"""
        assert I.decimal(3) == "0.000+1.000i"


class TestConductorCap:
    """Tests for SPIN_MAX_CONDUCTOR"""

    def test_large_conductor_refused(self):
        """Test a conductor above the cap raises ResourceCapExceeded"""
        with resource_caps(max_conductor=10):
            with pytest.raises(ResourceCapExceeded):
                make_root_of_unity(11, 1)

    def test_cap_restored(self):
        """Test the cap is restored after the context exits"""
        with resource_caps(max_conductor=10):
            pass
        assert make_root_of_unity(11, 1) ** 11 == 1
