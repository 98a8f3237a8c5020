import pytest
from services.covers import PLUS
from services.cyclo import gauss_half
from services.lemmas import LEMMAS, lemma_suite
from services.ntilde import ntilde
from services.wreath import (
    SELF,
    WreathCharLabel,
    WreathClassLabel,
    check_wreath_label,
    exten_trace_value,
    exten_value,
    matrix_oracle,
    mn_check,
    monomial_identities,
    ntilde_chars,
    ordinary_char,
    wreath_alt_value,
    wreath_char_value,
    wreath_group,
    wreath_labels,
    wreath_order,
    wreath_table,
)


@pytest.fixture(params=["+", "-"])
def cover(request):
    """Both double covers"""
    return request.param


class TestNTilde:
    """Tests for the double cover of N_p"""

    def test_requires_odd_prime(self):
        """Test p must be an odd prime"""
        with pytest.raises(ValueError):
            ntilde(4)
        with pytest.raises(ValueError):
            ntilde(2)

    def test_normal_forms_cover_the_group(self, cover):
        """Test every normal form names a distinct element"""
        nt = ntilde(5, cover)
        elements = {nt.element(*form) for form in nt.elements}
        assert len(elements) == 2 * 5 * 4

    def test_normal_form_inverts_element(self, cover):
        """Test normal_form(element(a, b, s)) = (a, b, s)"""
        nt = ntilde(5, cover)
        for form in nt.elements:
            assert nt.normal_form(nt.element(*form)) == form

    def test_zeta0_degree(self):
        """Test zeta_0 has degree p - 1"""
        for p in (3, 5, 7):
            assert ntilde(p).zeta0_value((0, 0, 0)) == p - 1

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_monomial_identities(self, p, cover):
        """Test the associator and swap identities and the closed forms of the extension traces"""
        assert monomial_identities(p, cover) == []

    @pytest.mark.parametrize("p", [3, 5, 7, 13])
    def test_zeta0_alt_anchor(self, p, cover):
        """Test zeta-bar_0^+ on o(c) is (-1 + i^((p-1)/2) sqrt(p)) / 2 with zeta-bar_0^- taking the opposite root"""
        nt = ntilde(p, cover)
        assert nt.zeta0_alt_value((1, 0, 0), 1) == gauss_half(p, 1)
        assert nt.zeta0_alt_value((1, 0, 0), -1) == gauss_half(p, -1)

    def test_character_counts(self):
        """Test zeta_0 plus a pair per j on N_p, and the alt side counts"""
        assert len(ntilde_chars(3)["characters"]) == 3
        assert len(ntilde_chars(5)["characters"]) == 5
        assert len(ntilde_chars(5, ambient="alt")["characters"]) == 4


class TestWreathGroup:
    """Tests for the double cover of N_p wr S_t"""

    @pytest.mark.parametrize("p,t,order", [(3, 1, 12), (3, 2, 144), (5, 1, 40), (5, 2, 1600)])
    def test_orders(self, p, t, order):
        """Test |N_p wr S_t| doubled against the enumerated group"""
        assert wreath_order(p, t) == order
        group = wreath_group(p, t)
        assert len(group.group) == order
        assert sum(c["size"] for c in group.classes()) == order
        assert sum(c["size"] for c in group.alt_classes()) == order // 2

    def test_order_formula_at_t3(self):
        """Test the order formula at t = 3"""
        assert wreath_order(3, 3) == 2592

    def test_relations(self, cover):
        """Test the block swaps satisfy the Coxeter relations of a cover of S_t"""
        wreath_group(3, 3, cover).check_relations()

    def test_decompose_compose(self, cover):
        """Test every element is rebuilt from its normal form"""
        group = wreath_group(3, 2, cover)
        for x in group.group.elements:
            forms, pi, e = group.decompose(x)
            assert group.compose(forms, pi, e) == x

    def test_s_beta_prime(self, cover):
        """Test s'_beta has its beta cycles of p-cycle type and fixes the other blocks"""
        group = wreath_group(3, 2, cover)
        assert group.element_type(group.s_beta_prime((1,))) == ((1,), (), (1,))
        assert group.element_type(group.s_beta_prime((1, 1))) == ((1, 1), (), ())
        with pytest.raises(ValueError):
            group.s_beta_prime((2,))
        with pytest.raises(ValueError):
            group.s_beta_prime((3,))


class TestWreathCharacters:
    """Tests for the spin character tables of N_p wr S_t"""

    def test_three_characters_at_p3_t1(self):
        """Test p = 3, t = 1 has three spin characters"""
        assert len(wreath_labels(3, 1)) == 3
        assert len(wreath_table(3, 1)["characters"]) == 3

    def test_invalid_label(self):
        """Test labels with the wrong shape are refused"""
        with pytest.raises(ValueError):
            check_wreath_label(WreathCharLabel(((1,), (), ()), SELF), 3, 1)
        with pytest.raises(ValueError):
            check_wreath_label(WreathCharLabel(((), (1,)), SELF), 3, 1)

    def test_ordinary_characters(self):
        """Test the symmetric group characters used by the Clifford part"""
        assert ordinary_char((2, 1), (1, 1, 1)) == 2
        assert ordinary_char((2, 1), (3,)) == -1
        assert ordinary_char((1, 1, 1), (2, 1)) == -1

    @pytest.mark.parametrize("p", [3, 5])
    def test_exten_values(self, p):
        """Test Exten^+ is zeta_0 = -1 on o(c) and (p - 1)^t on the identity"""
        assert exten_value("exten+", p, [((1, 0), 1)]) == -1
        identity_cycles = [((0, 0), 1), ((0, 0), 1)]
        assert exten_value("exten+", p, identity_cycles) == (p - 1) ** 2
        assert exten_trace_value("exten+", p, identity_cycles) == (p - 1) ** 2

    def test_linear_character_on_order_p_element(self, cover):
        """Test chi^((),(1))+ takes the value 1 on the order 3 class of N_3"""
        char = WreathCharLabel(((), (1,)), "+")
        label = WreathClassLabel(((1,), (), ()), PLUS)
        assert wreath_char_value(char, label, 3, cover) == 1

    def test_alt_value_on_order_p_element(self):
        """Test the restriction of the pair ((),(1))+- to the even part is 1 on o(c)"""
        char = WreathCharLabel(((), (1,)), SELF, "alt")
        label = WreathClassLabel(((1,), (), ()), PLUS)
        assert wreath_alt_value(char, label, 3) == 1

    @pytest.mark.parametrize("p,t", [(3, 1), (3, 2), (5, 1)])
    def test_matrix_oracle(self, p, t, cover):
        """Test the constructed tables agree with the Dixon tables"""
        assert matrix_oracle(p, t, cover)["diffs"] == []

    @pytest.mark.parametrize("p,t", [(3, 1), (3, 2), (5, 1), (5, 2)])
    def test_degree_squares(self, p, t):
        """Test the spin degrees account for half of the order of the cover"""
        group = wreath_group(p, t)
        one = group.position_of(group.group.elements[0])
        degrees = [row[one] for row in wreath_table(p, t)["values"]]
        assert sum(d * d for d in degrees) == wreath_order(p, t) // 2

    @pytest.mark.slow
    def test_matrix_oracle_p5_t2(self, cover):
        """Test p = 5, t = 2 against the Dixon tables"""
        assert matrix_oracle(5, 2, cover)["diffs"] == []

    @pytest.mark.slow
    def test_matrix_oracle_t3(self):
        """Test p = 3, t = 3 against the Dixon tables"""
        assert matrix_oracle(3, 3, "+")["diffs"] == []

    @pytest.mark.parametrize("q", [1])
    def test_mn_rule(self, q):
        """Test the label-insensitive MN rule at t = 2"""
        assert mn_check(3, 2, q) == []

    @pytest.mark.slow
    def test_mn_rule_t3(self):
        """Test the MN rule stripping a 3-cycle at t = 3"""
        assert mn_check(3, 3, 3) == []
        assert mn_check(3, 3, 1) == []


class TestLocalLemmas:
    """Tests for the local lemma suite"""

    def test_p3_t1(self, cover):
        """Test every lemma holds for p = 3, t = 1"""
        result = lemma_suite(3, 1, cover)
        assert result["failures"] == []
        assert result["lemmas"] == list(LEMMAS)

    @pytest.mark.parametrize("p,t", [(3, 2), (5, 1)])
    def test_larger_cases(self, p, t, cover):
        """Test the lemmas at p = 3, t = 2 and p = 5, t = 1"""
        assert lemma_suite(p, t, cover)["failures"] == []

    @pytest.mark.slow
    @pytest.mark.parametrize("p,t", [(3, 3), (5, 2)])
    def test_acceptance_cases(self, p, t, cover):
        """Test the lemmas at p = 3, t = 3 and p = 5, t = 2"""
        assert lemma_suite(p, t, cover)["failures"] == []
