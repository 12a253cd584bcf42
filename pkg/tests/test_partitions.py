"""Partitions, corners, and single-cell transfers."""

import pytest

from partition_complex.partitions import (
    ADDABLE,
    REMOVABLE,
    Corner,
    InadmissibleTransferError,
    InvalidCornerError,
    InvalidPartitionError,
    addable_corners,
    admissible_transfers,
    apply_transfer,
    as_partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    height,
    is_admissible,
    parse_partition,
    removable_corners,
)


def test_as_partition_accepts_weakly_decreasing():
    assert as_partition([3, 1]) == (3, 1)
    assert as_partition((2, 2, 1)) == (2, 2, 1)


@pytest.mark.parametrize("bad", [[], [0], [-1], [1, 2], [2, 0], [1.5, 1], [True]])
def test_as_partition_rejects_invalid(bad):
    with pytest.raises(InvalidPartitionError):
        as_partition(bad)


def test_parse_and_format_round_trip():
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition(" [2, 2] ") == (2, 2)
    assert format_partition((2, 1, 1)) == "[2,1,1]"
    for lam in enumerate_partitions(7):
        assert parse_partition(format_partition(lam)) == lam


@pytest.mark.parametrize("text", ["3,1", "[]", "[3;1]", "[1,3]", "[a]"])
def test_parse_rejects_malformed(text):
    with pytest.raises(InvalidPartitionError):
        parse_partition(text)


def test_enumerate_small():
    assert enumerate_partitions(1) == [(1,)]
    assert enumerate_partitions(4) == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(10)) == 42


def test_enumerate_rejects_nonpositive():
    with pytest.raises(InvalidPartitionError):
        enumerate_partitions(0)


def test_conjugate():
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((3, 1)) == (2, 1, 1)
    for lam in enumerate_partitions(9):
        assert conjugate(conjugate(lam)) == lam


def test_height():
    assert height((7,)) == 7
    assert height((1, 1, 1, 1)) == 10
    assert height((2, 1, 1)) == 7


def test_removable_corners():
    assert removable_corners((6,)) == [Corner(1, 6, REMOVABLE)]
    assert removable_corners((3, 1)) == [
        Corner(1, 3, REMOVABLE), Corner(2, 1, REMOVABLE)]
    # Row 1 of (2,2) is blocked because the row below has equal length.
    assert removable_corners((2, 2)) == [Corner(2, 2, REMOVABLE)]


def test_addable_corners():
    assert addable_corners((1,)) == [Corner(1, 2, ADDABLE), Corner(2, 1, ADDABLE)]
    assert addable_corners((3, 1)) == [
        Corner(1, 4, ADDABLE), Corner(2, 2, ADDABLE), Corner(3, 1, ADDABLE)]
    assert addable_corners((2, 2)) == [Corner(1, 3, ADDABLE), Corner(3, 1, ADDABLE)]


def test_corner_rows_recoverable_from_columns():
    # The row of a corner is a function of its column via the conjugate.
    for lam in enumerate_partitions(8):
        conj = conjugate(lam)
        for c in removable_corners(lam):
            assert c.row == conj[c.col - 1]
        for a in addable_corners(lam):
            assert a.row == (conj[a.col - 1] + 1 if a.col <= len(conj) else 1)


def test_apply_transfer():
    assert apply_transfer((3, 1), (1, 3), (2, 2)) == (2, 2)
    assert apply_transfer((1, 1, 1), (3, 1), (1, 2)) == (2, 1)


def test_apply_transfer_rejects_identity_move():
    # Moving the last cell into a fresh last row rebuilds the same shape.
    with pytest.raises(InadmissibleTransferError):
        apply_transfer((1, 1, 1), (3, 1), (4, 1))


def test_apply_transfer_rejects_same_row():
    with pytest.raises(InadmissibleTransferError):
        apply_transfer((2, 1), (1, 2), (1, 3))


def test_apply_transfer_rejects_non_corners():
    with pytest.raises(InvalidCornerError):
        apply_transfer((3, 1), (1, 2), (2, 2))
    with pytest.raises(InvalidCornerError):
        apply_transfer((3, 1), (1, 3), (2, 3))


def test_is_admissible():
    assert is_admissible((3, 1), (1, 3), (2, 2))
    assert not is_admissible((2,), (1, 2), (1, 3))
    assert not is_admissible((1, 1), (2, 1), (3, 1))


def test_admissible_transfers_preserve_size_and_change_shape():
    for lam in enumerate_partitions(8):
        for c, a, result in admissible_transfers(lam):
            assert sum(result) == 8
            assert result != lam
            assert c.row != a.row
            assert apply_transfer(lam, c, a) == result


def test_single_cell_partition_has_no_transfers():
    assert admissible_transfers((1,)) == []
