import pytest
from fractions import Fraction
from math import factorial, prod
from services.covers import PLUS, SymClassLabel
from services.cyclo import conjugate, csum
from services.partitions import strict_minus, strict_plus
from services.spin_sym import (
    SELF,
    SpinCharLabel,
    alt_associator_value,
    check_label,
    dixon_check,
    inner_product,
    mn_expand,
    qcycle_sign,
    spin_degree,
    spin_labels,
    spin_table,
    xi_alt_value,
    xi_value,
)


@pytest.fixture(params=["+", "-"])
def cover(request):
    """Both double covers"""
    return request.param


def identity_class(n: int) -> SymClassLabel:
    return SymClassLabel((1,) * n, PLUS)


class TestLabels:
    """Tests for spin character labels"""

    def test_counts(self):
        """Test three spin characters for n = 3 and n = 4"""
        assert len(spin_labels(3)) == 3
        assert len(spin_labels(4)) == 3

    def test_associates_by_sigma(self):
        """Test sigma = -1 partitions give associate pairs on the sym side"""
        labels = spin_labels(4)
        assert SpinCharLabel((4,), "+") in labels
        assert SpinCharLabel((4,), "-") in labels
        assert SpinCharLabel((3, 1), SELF) in labels

    def test_alt_side_swaps_pairing(self):
        """Test sigma = +1 partitions split on the alt side"""
        labels = spin_labels(4, "alt")
        assert SpinCharLabel((3, 1), "+", "alt") in labels
        assert SpinCharLabel((4,), SELF, "alt") in labels

    def test_invalid_variant(self):
        """Test a self-associate character with a variant is refused"""
        with pytest.raises(ValueError):
            check_label(SpinCharLabel((3, 1), "+"))


class TestDegrees:
    """Tests for Schur's degree formula"""

    def test_s5_degrees(self):
        """Test the degrees 4, 6, 6, 4, 4 of the double cover of S_5"""
        degrees = [xi_value(ch, identity_class(5)) for ch in spin_labels(5)]
        assert degrees == [4, 6, 6, 4, 4]

    def test_xi4_on_identity(self):
        """Test xi_(4)(1^4) = 2"""
        assert xi_value(SpinCharLabel((4,), "+"), identity_class(4)) == 2
        assert spin_degree((4,)) == 2

    def test_squares_sum_to_n_factorial(self):
        """Test the spin degrees account for half of the cover's order"""
        for n in range(2, 9):
            total = sum(spin_degree(ch.partition) ** 2 for ch in spin_labels(n))
            assert total == factorial(n)


class TestValues:
    """Tests for character values"""

    def test_qcycle_sign(self):
        """Test (-1)^((q^2-1)/8)"""
        assert [qcycle_sign(q) for q in (1, 3, 5, 7, 9)] == [1, -1, -1, 1, 1]

    def test_minus_class_negates(self, cover):
        """Test chi(z x) = -chi(x)"""
        ch = SpinCharLabel((3, 2), "+")
        plus = xi_value(ch, SymClassLabel((3, 1, 1), PLUS), cover)
        minus = xi_value(ch, SymClassLabel((3, 1, 1), "minus"), cover)
        assert minus == -plus

    def test_unsplit_classes_vanish(self, cover):
        """Test spin characters vanish on classes that do not split"""
        assert xi_value(SpinCharLabel((3, 2), "+"), SymClassLabel((2, 2, 1), "unsplit"), cover) == 0

    def test_pair_differs_on_own_type(self, cover):
        """Test the members of a pair differ only on the class of type lam"""
        plus = xi_value(SpinCharLabel((4, 1), "+"), SymClassLabel((4, 1), PLUS), cover)
        minus = xi_value(SpinCharLabel((4, 1), "-"), SymClassLabel((4, 1), PLUS), cover)
        assert plus == -minus
        assert plus != 0

    def test_alt_restriction_adds_up(self, cover):
        """Test a split pair on the alt side sums to the restricted character"""
        label = SymClassLabel((3, 1), PLUS)
        plus = xi_alt_value(SpinCharLabel((3, 1), "+", "alt"), label, cover)
        minus = xi_alt_value(SpinCharLabel((3, 1), "-", "alt"), label, cover)
        assert plus + minus == xi_value(SpinCharLabel((3, 1), SELF), label, cover)

    def test_size_mismatch(self):
        """Test a class of the wrong degree is refused"""
        with pytest.raises(ValueError):
            xi_value(SpinCharLabel((3,), SELF), identity_class(4))


class TestSpecialValues:
    """Tests for the values on the class of a character's own type"""

    @pytest.mark.parametrize("n", range(2, 11))
    def test_strict_minus_values(self, n, cover):
        """Test xi^+_lam on its own type has |value|^2 = prod(lam)/2 and the cover's phase"""
        for lam in strict_minus(n):
            value = xi_value(SpinCharLabel(lam, "+"), SymClassLabel(lam, PLUS), cover)
            assert value * conjugate(value) == Fraction(prod(lam), 2)
            exponent = (n - len(lam) + 1) // 2 if cover == "-" else (1 - (n - len(lam))) // 2
            assert value * value == Fraction(prod(lam), 2) * (-1) ** exponent

    @pytest.mark.parametrize("n", range(3, 11))
    def test_alt_pair_difference(self, n, cover):
        """Test xi-bar^+ - xi-bar^- on its own type has |value|^2 = prod(lam)"""
        for lam in strict_plus(n):
            label = SymClassLabel(lam, PLUS)
            plus = xi_alt_value(SpinCharLabel(lam, "+", "alt"), label, cover)
            minus = xi_alt_value(SpinCharLabel(lam, "-", "alt"), label, cover)
            difference = plus - minus
            assert difference == alt_associator_value(lam, label)
            assert difference * conjugate(difference) == prod(lam)


class TestOrthogonality:
    """Tests for the inner products of the constructed tables"""

    @pytest.mark.parametrize("ambient", ["sym", "alt"])
    def test_orthonormal_rows(self, ambient, cover):
        """Test the spin characters are orthonormal for n <= 6"""
        for n in range(2, 7):
            table = spin_table(n, ambient, cover)
            rows = table["values"]
            for a in range(len(rows)):
                for b in range(a, len(rows)):
                    expected = 1 if a == b else 0
                    assert inner_product(rows[a], rows[b], table["classes"]) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8, 9, 10])
    @pytest.mark.parametrize("ambient", ["sym", "alt"])
    def test_orthonormal_rows_to_n10(self, n, ambient, cover):
        """Test orthonormality for 7 <= n <= 10"""
        table = spin_table(n, ambient, cover)
        rows = table["values"]
        for a in range(len(rows)):
            for b in range(a, len(rows)):
                expected = 1 if a == b else 0
                assert inner_product(rows[a], rows[b], table["classes"]) == expected


class TestMurnaghanNakayama:
    """Tests for the MN expansion coefficients"""

    def test_expansion_reproduces_values(self):
        """Test xi_lam(o(q-cycle) x) from the expansion for (4,2) with q = 3"""
        char = SpinCharLabel((4, 2), SELF)
        terms = mn_expand(char, 3)
        assert [mu for mu, _ in terms] == [SpinCharLabel((2, 1), "+"), SpinCharLabel((2, 1), "-")]
        expanded = csum(coeff * xi_value(mu, identity_class(3)) for mu, coeff in terms)
        assert expanded == xi_value(char, SymClassLabel((3, 1, 1, 1), PLUS))
        assert expanded == 2

    def test_even_q_rejected(self):
        """Test q must be odd"""
        with pytest.raises(ValueError):
            mn_expand(SpinCharLabel((4, 1), "+"), 2)


class TestDixonOracle:
    """Tests comparing the constructed tables with the Dixon tables"""

    @pytest.mark.parametrize("ambient", ["sym", "alt"])
    def test_n4_agrees(self, ambient, cover):
        """Test the double covers of S_4 and A_4 match the enumerated tables"""
        assert dixon_check(4, ambient, cover) == []

    def test_n5_sym_agrees(self):
        """Test the double cover of S_5 on the + cover"""
        assert dixon_check(5, "sym", "+") == []
