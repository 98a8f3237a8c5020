import pytest
from collections import defaultdict
from services.partitions import (
    bar_core,
    bar_sign,
    bar_core_quotient,
    bar_quotient,
    centralizer_order,
    check_leg_lengths,
    core_quotient,
    delta_minus,
    delta_plus,
    delta_set,
    from_bar_core_quotient,
    multi_size,
    multi_sigma,
    parse_partition,
    parse_multipartition,
    partitions_of,
    q_core,
    q_quotient,
    q_sign,
    quotient_sign,
    remove_q_bars,
    remove_q_hooks,
    render_multipartition,
    sigma,
    strict_minus,
    strict_partitions,
    strict_plus,
    strict_with_core,
)


class TestEnumeration:
    """Tests for partition enumeration and parsing"""

    def test_partition_counts(self):
        """Test p(n) and strict partition counts for small n"""
        assert len(partitions_of(4)) == 5
        assert len(partitions_of(7)) == 15
        assert strict_partitions(5) == ((5,), (4, 1), (3, 2))

    def test_strict_by_sigma(self):
        """Test D_5^+ and D_5^- split the strict partitions of 5"""
        assert strict_plus(5) == ((5,),)
        assert strict_minus(5) == ((4, 1), (3, 2))

    def test_sigma(self):
        """Test sigma(lam) = (-1)^(|lam| - l(lam))"""
        assert sigma(()) == 1
        assert sigma((3,)) == 1
        assert sigma((4, 1)) == -1
        assert sigma((2, 1)) == -1

    def test_centralizer_order(self):
        """Test z_pi for a few cycle types"""
        assert centralizer_order((2, 1, 1)) == 4
        assert centralizer_order((3,)) == 3
        assert centralizer_order((1, 1, 1)) == 6

    def test_parse_partition(self):
        """Test parsing comma separated parts"""
        assert parse_partition("4,2") == (4, 2)
        assert parse_partition("1,3") == (3, 1)
        assert parse_partition("") == ()
        assert parse_multipartition("3|2,1|") == ((3,), (2, 1), ())

    @pytest.mark.parametrize("text", ["a,b", "0,1", "-2"])
    def test_parse_rejects_bad_input(self, text):
        """Test malformed partitions raise ValueError"""
        with pytest.raises(ValueError):
            parse_partition(text)


class TestHooks:
    """Tests for ordinary q-cores and q-quotients"""

    def test_q_core(self):
        """Test q-cores of small partitions"""
        assert q_core((2, 2), 2) == ()
        assert q_core((2, 1), 2) == (2, 1)
        assert q_core((4,), 3) == (1,)
        assert q_core((3, 1), 3) == (3, 1)

    def test_core_quotient_weight(self):
        """Test |lam| = |core| + q * weight"""
        for lam in partitions_of(8):
            core, quotient, weight, sign = core_quotient(lam, 3)
            assert sum(lam) == sum(core) + 3 * weight
            assert sum(sum(c) for c in quotient) == weight
            assert sign in (1, -1)


class TestBars:
    """Tests for q-bar removal, bar cores and bar quotients"""

    def test_remove_bars(self):
        """Test both kinds of bar removal with their leg lengths"""
        assert remove_q_bars((4, 1), 5) == [((), 1)]
        assert ((1,), 0) in remove_q_bars((4,), 3)
        assert ((), 1) in remove_q_bars((2, 1), 3)

    def test_even_bar_length_rejected(self):
        """Test bars must have odd length"""
        with pytest.raises(ValueError):
            remove_q_bars((4, 1), 2)

    def test_bar_core_examples(self):
        """Test the blocks (4,2) p=3, (2,1) p=5 and (3) p=3"""
        assert bar_core_quotient((4, 2), 3)[0] == ()
        assert bar_core_quotient((4, 2), 3)[2] == 2
        assert bar_core((2, 1), 5) == (2, 1)
        assert bar_core_quotient((3,), 3)[2] == 1

    def test_quotient_shape(self):
        """Test a p-bar quotient has (p+1)/2 components summing to the weight"""
        for lam in strict_partitions(11):
            core, quotient, weight, _ = bar_core_quotient(lam, 5)
            assert len(quotient) == 3
            assert sum(sum(c) for c in quotient) == weight
            assert all(a > b for a, b in zip(quotient[0], quotient[0][1:]))

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_reconstruction(self, p):
        """Test a strict partition is rebuilt from its bar core and quotient"""
        for n in range(11):
            for lam in strict_partitions(n):
                rebuilt = from_bar_core_quotient(bar_core(lam, p), bar_quotient(lam, p), p)
                assert rebuilt == lam

    def test_core_and_quotient_determine_partition(self):
        """Test Psi is injective on a block"""
        members = strict_with_core(9, (), 3)
        quotients = {bar_quotient(lam, 3) for lam in members}
        assert len(quotients) == len(members)

    def test_reconstruction_rejects_non_core(self):
        """Test a partition that is not a bar core is refused"""
        with pytest.raises(ValueError):
            from_bar_core_quotient((3,), ((), ()), 3)

    def test_leg_length_signs(self):
        """Test every bar and hook removal respects the sign identity"""
        assert check_leg_lengths(18) > 0


class TestMultipartitions:
    """Tests for the label sets of N_p wr S_t"""

    def test_delta_sizes(self):
        """Test |Delta_1| and |Delta_2| for p = 3"""
        assert len(delta_set(1, 3)) == 2
        assert len(delta_set(2, 3)) == 4

    def test_delta_split_by_sigma(self):
        """Test Delta_t is the disjoint union of its sigma = +1 and -1 parts"""
        for t in (1, 2, 3):
            assert len(delta_plus(t, 5)) + len(delta_minus(t, 5)) == len(delta_set(t, 5))

    def test_multi_sigma(self):
        """Test sigma(lam_0) (-1)^(t - t_0)"""
        assert multi_sigma(((1,), ())) == 1
        assert multi_sigma(((), (1,))) == -1
        assert multi_sigma(((2,), (1,))) == 1

    def test_quotient_sign(self):
        """Test the sign of a quotient multiplies the bar sign of lam_0 with the hook signs"""
        assert quotient_sign(((3,), ()), 3) == bar_sign((3,), 3)
        assert quotient_sign(((), (2, 2)), 3) == -1

    def test_render(self):
        """Test the bar-separated form"""
        assert render_multipartition(((2, 1), (), (1,))) == "2,1||1"


SAMPLES = 10_000
MAX_RANDOM_SIZE = 25


def random_removal(lam, q, moves_of, rng):
    """Strip q-bars or q-hooks in a random order; return the core and the product of leg signs"""
    sign = 1
    moves = moves_of(lam, q)
    while moves:
        lam, leg = rng.choice(moves)
        sign *= (-1) ** leg
        moves = moves_of(lam, q)
    return lam, sign


class TestRandomizedPartitions:
    """Randomized checks on partitions of size at most 25; replay a failure with --seed"""

    @pytest.mark.slow
    def test_bar_cores_and_quotients(self, rng):
        """Test bar cores and signs do not depend on the removal order and Psi round-trips"""
        for _ in range(SAMPLES):
            lam = rng.choice(strict_partitions(rng.randint(0, MAX_RANDOM_SIZE)))
            p = rng.choice((3, 5, 7))
            core, quotient, weight, sign = bar_core_quotient(lam, p)
            assert random_removal(lam, p, remove_q_bars, rng) == (core, sign)
            assert multi_size(quotient) == weight
            assert from_bar_core_quotient(core, quotient, p) == lam
            assert sigma(lam) == sigma(core) * multi_sigma(quotient)

    @pytest.mark.slow
    def test_hook_cores(self, rng):
        """Test q-cores and signs do not depend on the removal order"""
        for _ in range(SAMPLES):
            lam = rng.choice(partitions_of(rng.randint(0, MAX_RANDOM_SIZE)))
            q = rng.choice((2, 3, 5))
            core = q_core(lam, q)
            assert random_removal(lam, q, remove_q_hooks, rng) == (core, q_sign(lam, q))
            assert multi_size(q_quotient(lam, q)) == (sum(lam) - sum(core)) // q


class TestExhaustivePartitions:
    """Exhaustive checks on all strict partitions of size at most 16"""

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_psi_is_a_sigma_preserving_bijection(self, p):
        """Test Psi maps each E_gamma onto Delta_w, with sigma(lam) = sigma(gamma) sigma(Psi(lam))"""
        for n in range(17):
            by_core = defaultdict(list)
            for lam in strict_partitions(n):
                by_core[bar_core(lam, p)].append(lam)
            for core, members in by_core.items():
                weight = (n - sum(core)) // p
                quotients = [bar_quotient(lam, p) for lam in members]
                assert sorted(quotients) == sorted(delta_set(weight, p))
                for lam, quotient in zip(members, quotients):
                    assert sigma(lam) == sigma(core) * multi_sigma(quotient)
                    assert from_bar_core_quotient(core, quotient, p) == lam
