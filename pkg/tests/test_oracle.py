import pytest

from nearfactor.graph import Graph, generate
from nearfactor.matching import Matching
from nearfactor.oracle import (
    OracleBoundError,
    enumerate_matchings,
    has_near_factor_brute,
    has_perfect_brute,
    max_matching_size_brute,
)


def _as_sets(g):
    return {m.edges for m in enumerate_matchings(g)}


def test_k2():
    assert _as_sets(generate("complete", 2)) == {frozenset(), frozenset({(0, 1)})}


def test_p3():
    assert _as_sets(generate("path", 3)) == {frozenset(), frozenset({(0, 1)}), frozenset({(1, 2)})}


def test_c4_seven_matchings():
    # empty + 4 single edges + {01,23} + {03,12}
    expected = {frozenset()} | {frozenset({e}) for e in [(0, 1), (1, 2), (2, 3), (0, 3)]}
    expected |= {frozenset({(0, 1), (2, 3)}), frozenset({(0, 3), (1, 2)})}
    found = list(enumerate_matchings(generate("cycle", 4)))
    assert len(found) == 7
    assert {m.edges for m in found} == expected


def test_empty_matching_first():
    assert next(enumerate_matchings(generate("complete", 4))) == Matching(frozenset())


def test_each_matching_once_and_valid():
    g = generate("complete", 6)
    found = [m.edges for m in enumerate_matchings(g)]
    assert len(found) == len(set(found))
    for m in found:
        ends = [x for e in m for x in e]
        assert len(ends) == len(set(ends))
    # complete graph: sum over k of C(6,2k)(2k-1)!! = 1 + 15 + 45 + 15
    assert len(found) == 76


def _fib(k):
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("n", range(1, 11))
def test_path_counts_are_fibonacci(n):
    # recurrence M(n) = M(n-1) + M(n-2): last vertex unmatched, or matched to
    # its neighbour
    assert sum(1 for _ in enumerate_matchings(generate("path", n))) == _fib(n + 1)


def test_c5_facts():
    g = generate("cycle", 5)
    assert max_matching_size_brute(g) == 2
    assert not has_perfect_brute(g)
    assert has_near_factor_brute(g)


def test_two_triangles_no_perfect(two_triangles):
    assert not has_perfect_brute(two_triangles)


def test_k4_perfect():
    assert has_perfect_brute(generate("complete", 4))


def test_order_zero():
    assert list(enumerate_matchings(Graph(0))) == [Matching(frozenset())]
    assert has_perfect_brute(Graph(0))
    assert not has_near_factor_brute(Graph(0))


def test_guard():
    with pytest.raises(OracleBoundError):
        next(enumerate_matchings(Graph(17)))
    with pytest.raises(OracleBoundError):
        max_matching_size_brute(Graph(17))
