"""Exact-sequence tests; small values pinned against brute-force enumeration."""

from math import factorial

import pytest

from negpolylog.combinatorics import binomial, eulerian_b, eulerian_b_row, stirling2


def set_partitions(elems):
    """All partitions of a list into nonempty blocks, by direct recursion."""
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def brute_stirling2(n, k):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == k)


def test_stirling2_small_values():
    assert stirling2(3, 3) == 1
    assert stirling2(3, 2) == 3 == brute_stirling2(3, 2)
    assert stirling2(5, 0) == 0
    assert stirling2(4, 7) == 0  # k > n


def test_stirling2_matches_enumeration():
    for n in range(8):
        for k in range(n + 2):
            assert stirling2(n, k) == brute_stirling2(n, k), (n, k)


def test_stirling2_recurrence():
    for n in range(30):
        for k in range(n + 2):
            assert stirling2(n + 1, k) == k * stirling2(n, k) + stirling2(n, k - 1)


def test_eulerian_b_values():
    assert eulerian_b(2, 2) == 6
    assert eulerian_b(4, 3) == 230
    assert eulerian_b(5, 1) == 1


def test_eulerian_b_range_check():
    with pytest.raises(ValueError):
        eulerian_b(3, 0)
    with pytest.raises(ValueError):
        eulerian_b(3, 5)


def test_eulerian_b_first_rows():
    expected = [(1,), (1, 1), (1, 6, 1), (1, 23, 23, 1), (1, 76, 230, 76, 1)]
    for n, row in enumerate(expected):
        assert eulerian_b_row(n) == row


def test_eulerian_b_row_sum_and_symmetry():
    for n in range(21):
        row = eulerian_b_row(n)
        assert sum(row) == 2**n * factorial(n)
        for k in range(1, n + 2):
            assert eulerian_b(n, k) == eulerian_b(n, n + 2 - k)


def test_concurrent_first_computation_is_safe():
    # cache contract: concurrent readers and first-writers must all see
    # correct values (duplicated computation is fine)
    from concurrent.futures import ThreadPoolExecutor

    import negpolylog.combinatorics as comb

    comb._STIRLING_ROWS.clear()
    comb._STIRLING_ROWS[0] = (1,)
    comb._EULERIAN_B_ROWS.clear()

    def worker(_):
        return (stirling2(40, 17), eulerian_b(25, 12))

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = set(pool.map(worker, range(32)))
    assert len(results) == 1
    s, e = results.pop()
    assert s == stirling2(40, 17) and e == eulerian_b(25, 12)


def test_binomial():
    assert binomial(6, 3) == 20
    assert all(binomial(n, 0) == 1 for n in range(10))
    assert binomial(4, 7) == 0
    assert binomial(4, -1) == 0
    # Pascal recurrence
    for n in range(1, 15):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
