import pytest
from services.isometry import (
    brauer_composed,
    build_I,
    build_IA,
    coherence_check,
    kernel,
    kernel_matrix,
    mutation_report,
    verify_broue,
)


WEIGHT_ONE = [(3, 3, ()), (4, 3, (1,)), (5, 5, ()), (6, 5, (1,))]
WEIGHT_TWO = [(6, 3, ()), (7, 3, (1,))]


@pytest.fixture
def weight_one_map():
    """I for the principal 3-block of the double cover of S_3"""
    return build_I(3, 3, ())


class TestBuild:
    """Tests for constructing the signed bijections"""

    def test_entries_cover_the_block(self, weight_one_map):
        """Test every block character has exactly one image"""
        sources = [e.source for e in weight_one_map.entries]
        assert sources == weight_one_map.source.labels
        assert len({e.target for e in weight_one_map.entries}) == len(weight_one_map.entries)
        assert all(e.sign in (1, -1) for e in weight_one_map.entries)

    def test_weight_one_target_has_three_characters(self, weight_one_map):
        """Test the local group N_3 wr S_1 has three spin characters"""
        assert len(weight_one_map.target.labels) == 3
        assert weight_one_map.weight == 1

    def test_invalid_core(self):
        """Test (2,1) is not a 3-bar core"""
        with pytest.raises(ValueError):
            build_I(6, 3, (2, 1))

    def test_sigma_minus_core_rejected(self):
        """Test cores with sigma = -1 are refused"""
        with pytest.raises(ValueError):
            build_I(2, 3, (2,))

    def test_non_abelian_defect_rejected(self):
        """Test w >= p is refused"""
        with pytest.raises(ValueError):
            build_I(9, 3, ())

    def test_weight_zero_is_identity(self):
        """Test a defect zero block maps onto itself"""
        imap = build_I(1, 3, (1,))
        assert imap.weight == 0
        assert all(e.source == e.target and e.sign == 1 for e in imap.entries)


class TestVerifyBroue:
    """Tests for the perfect isometry conditions"""

    @pytest.mark.parametrize("n,p,core", WEIGHT_ONE)
    def test_weight_one_blocks(self, n, p, core):
        """Test I is a perfect isometry on weight one blocks"""
        report = verify_broue(build_I(n, p, core))
        assert report["violations"] == []
        assert report["weight"] == 1

    @pytest.mark.slow
    @pytest.mark.parametrize("n,p,core", WEIGHT_TWO)
    def test_weight_two_blocks(self, n, p, core):
        """Test I is a perfect isometry on weight two blocks"""
        assert verify_broue(build_I(n, p, core))["violations"] == []

    def test_minus_cover(self):
        """Test the - cover at n = 3, p = 3"""
        assert verify_broue(build_I(3, 3, (), "-"))["violations"] == []

    @pytest.mark.parametrize("n,p,core", WEIGHT_ONE)
    def test_alt_side(self, n, p, core):
        """Test I_A is a perfect isometry on weight one blocks"""
        assert verify_broue(build_IA(n, p, core))["violations"] == []

    @pytest.mark.slow
    @pytest.mark.parametrize("n,p,core", WEIGHT_TWO)
    def test_alt_side_weight_two(self, n, p, core):
        """Test I_A is a perfect isometry on weight two blocks"""
        assert verify_broue(build_IA(n, p, core))["violations"] == []

    def test_weight_zero(self):
        """Test the identity map on a defect zero block passes"""
        assert verify_broue(build_I(1, 3, (1,)))["violations"] == []

    def test_pairs_checked(self, weight_one_map):
        """Test every class pair is visited"""
        report = verify_broue(weight_one_map)
        assert report["pairs_checked"] == len(weight_one_map.source.classes) * len(weight_one_map.target.classes)
        assert "entries" not in report
        assert report["runtime"] >= 0

    def test_kernel_matches_matrix(self, weight_one_map):
        """Test single kernel values agree with the kernel matrix"""
        K = kernel_matrix(weight_one_map)
        for i in range(len(weight_one_map.source.classes)):
            for j in range(len(weight_one_map.target.classes)):
                assert kernel(weight_one_map, i, j) == K[i][j]

    def test_kernel_out_of_range(self, weight_one_map):
        """Test class indices are range checked"""
        with pytest.raises(ValueError):
            kernel(weight_one_map, 100, 0)


class TestMutations:
    """Tests for the mutation harness"""

    def test_sign_flips_detected(self, weight_one_map):
        """Test flipping any single sign breaks the isometry"""
        report = mutation_report(weight_one_map)
        flips = [m for m in report if m["mutation"].startswith("flip")]
        assert len(flips) == len(weight_one_map.entries)
        assert all(m["status"] == "detected" for m in flips)

    @pytest.mark.parametrize("builder", [build_I, build_IA])
    @pytest.mark.parametrize("n,p,core", WEIGHT_ONE)
    def test_weight_one_flips_detected(self, builder, n, p, core):
        """Test every sign flip is caught on the weight one blocks of both sides"""
        report = mutation_report(builder(n, p, core))
        assert report
        assert [m for m in report if m["status"] == "undetected"] == []

    @pytest.mark.slow
    @pytest.mark.parametrize("builder", [build_I, build_IA])
    @pytest.mark.parametrize("n,p,core", WEIGHT_TWO)
    def test_weight_two_flips_detected(self, builder, n, p, core):
        """Test every sign flip is caught on the weight two blocks of both sides"""
        report = mutation_report(builder(n, p, core))
        assert [m for m in report if m["status"] == "undetected"] == []

    def test_flipped_map_fails(self, weight_one_map):
        """Test a hand-flipped map reports violations"""
        entries = list(weight_one_map.entries)
        first = entries[0]
        entries[0] = type(first)(first.source, -first.sign, first.target)
        assert verify_broue(weight_one_map.with_entries(entries))["violations"]


class TestCoherence:
    """Tests relating I_A to I"""

    def test_weight_one(self):
        """Test K_A - K/2 vanishes off strict sigma = +1 types"""
        assert coherence_check(3, 3, ()) == []


class TestBrauerComposition:
    """Tests for the map onto the Brauer correspondent"""

    def test_empty_core_unchanged(self):
        """Test an empty core composes to I itself"""
        imap = brauer_composed(3, 3, ())
        assert imap.brauer
        assert verify_broue(imap)["violations"] == []

    def test_core_one(self):
        """Test the composed map for core (1) at p = 3"""
        imap = brauer_composed(4, 3, (1,))
        assert all(e.target.core == (1,) for e in imap.entries)
        assert verify_broue(imap)["violations"] == []

    def test_alt_side_rejected(self):
        """Test the composition is built on the sym side only"""
        with pytest.raises(ValueError):
            brauer_composed(3, 3, (), side="alt")

    def test_core_one_at_p5(self):
        """Test the composed map for core (1) at p = 5"""
        imap = brauer_composed(6, 5, (1,))
        assert all(e.target.core == (1,) for e in imap.entries)
        assert verify_broue(imap)["violations"] == []

    @pytest.mark.slow
    @pytest.mark.parametrize("n,p,core", WEIGHT_TWO)
    def test_weight_two(self, n, p, core):
        """Test the composed map is a perfect isometry on weight two blocks"""
        assert verify_broue(brauer_composed(n, p, core))["violations"] == []
