import pytest
from services.blocks import (
    block_characters,
    block_for_core,
    block_of,
    blocks_of_n,
    brauer_data,
    c_block_check,
    psi_table,
    wreath_block,
)
from services.partitions import strict_with_core
from services.spin_sym import spin_labels


class TestBlockOf:
    """Tests for the block of a single character"""

    def test_weight_two_block(self):
        """Test (4,2) lies in the 3-block of empty core and weight 2"""
        block = block_of((4, 2), 3)
        assert block.core == ()
        assert block.weight == 2
        assert not block.split

    def test_weight_zero_split(self):
        """Test (2,1) is a 5-bar core whose sym block splits"""
        block = block_of((2, 1), 5)
        assert block.core == (2, 1)
        assert block.weight == 0
        assert block.split

    def test_weight_zero_alt_side(self):
        """Test a sigma = +1 core splits on the alt side only"""
        assert not block_of((3, 1), 5).split
        assert block_of((3, 1), 5, "alt").split

    def test_weight_one(self):
        """Test (3) has 3-weight 1"""
        assert block_of((3,), 3).weight == 1

    def test_non_strict_rejected(self):
        """Test non-strict partitions have no spin block"""
        with pytest.raises(ValueError):
            block_of((2, 2), 3)


class TestBlockForCore:
    """Tests for blocks named by a bar core"""

    def test_invalid_core(self):
        """Test (2,1) is not a 3-bar core"""
        with pytest.raises(ValueError):
            block_for_core(6, 3, (2, 1))

    def test_size_mismatch(self):
        """Test n must be |core| + p w"""
        with pytest.raises(ValueError):
            block_for_core(5, 3, ())

    def test_characters(self):
        """Test the block members are the strict partitions with that core"""
        block = block_for_core(6, 3, ())
        members = {ch.partition for ch in block_characters(block)}
        assert members == set(strict_with_core(6, (), 3))

    def test_abelian_defect(self):
        """Test the defect group is abelian exactly when w < p"""
        assert block_for_core(6, 3, ()).abelian_defect
        assert not block_for_core(9, 3, ()).abelian_defect


class TestBlocksOfN:
    """Tests for the full block decomposition"""

    @pytest.mark.parametrize("side", ["sym", "alt"])
    def test_partition_of_characters(self, side):
        """Test every spin character lies in exactly one block"""
        blocks = blocks_of_n(7, 3, side)
        listed = [name for b in blocks for name in b["characters"]]
        assert sorted(listed) == sorted(ch.render() for ch in spin_labels(7, side))

    def test_weight_zero_blocks_hold_one_character(self):
        """Test defect zero blocks are singletons"""
        for b in blocks_of_n(7, 5):
            if b["block"]["weight"] == 0:
                assert len(b["characters"]) == 1

    def test_c_blocks_stay_inside_bar_core_blocks(self):
        """Test characters linked on the C-set share a bar core"""
        assert c_block_check(6, 3) == []


class TestPsi:
    """Tests for the bar-quotient bijection on a block"""

    def test_psi_table(self):
        """Test Psi inverts on every member of the block"""
        table = psi_table(6, 3, ())
        assert len(table) == len(strict_with_core(6, (), 3))
        assert all(len(row["quotient"]) == 2 for row in table)


class TestBrauerData:
    """Tests for defect groups and Brauer correspondents"""

    def test_weight_one(self):
        """Test the block of (3) at p = 3 has defect group C_3"""
        data = brauer_data(block_for_core(3, 3, ()))
        assert data["defect_group"] == "C_3^1"
        assert data["defect_order"] == 3

    def test_weight_zero(self):
        """Test defect zero blocks have trivial defect"""
        data = brauer_data(block_for_core(3, 5, (2, 1), variant="+"))
        assert data["defect_order"] == 1
        assert data["idempotent"] == "e+_3,(2,1)"

    def test_non_abelian_rejected(self):
        """Test w >= p is refused"""
        with pytest.raises(ValueError):
            brauer_data(block_for_core(9, 3, ()))

    def test_wreath_block_rejected(self):
        """Test wreath blocks have no Brauer data"""
        with pytest.raises(ValueError):
            brauer_data(wreath_block(3, 1))
