import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperpoincare import closedforms as cf
from hyperpoincare.engines import (
    BigradedCounts,
    disjoint_path_counts,
    froberg_denominator,
    froberg_poincare,
    golod_poincare,
    koszul_poincare,
    taylor_is_minimal,
)
from hyperpoincare.errors import InvalidInputError, InvalidSeriesError, RangeError, SizeLimitError
from hyperpoincare.exactalg import ONE_PLUS_T, Polynomial, RationalFunction
from hyperpoincare.hypergraph import FamilySpec, build_family


def rf(num, den):
    return RationalFunction(Polynomial(tuple(num)), Polynomial(tuple(den)))


def test_koszul_examples():
    assert koszul_poincare(rf([1, 2], [1, -1])) == rf([1, 1], [1, -2])
    assert koszul_poincare(rf([1], [1, -1])) == RationalFunction(ONE_PLUS_T)
    assert koszul_poincare(rf([1, 1], [1, -1])) == rf([1, 1], [1, -1])


def test_koszul_rejects_bad_constant_term():
    with pytest.raises(InvalidSeriesError):
        koszul_poincare(rf([2, 1], [1, -1]))
    with pytest.raises(InvalidSeriesError):
        koszul_poincare(rf([1], [0, 1]))


def test_golod_examples():
    assert golod_poincare(3, [2, 1]) == rf((ONE_PLUS_T**3).coeffs, [1, 0, -2, -1])
    assert golod_poincare(5, [1]) == RationalFunction(ONE_PLUS_T**5, Polynomial((1, 0, -1)))
    assert golod_poincare(4, [3, 3, 1]) == cf.poincare_hyperstar(3, 2, 1).series


def test_golod_validation():
    with pytest.raises(InvalidInputError):
        golod_poincare(0, [1])
    with pytest.raises(InvalidInputError):
        golod_poincare(3, [])
    with pytest.raises(InvalidInputError):
        golod_poincare(3, [1, -1])


def test_path_count_examples():
    assert disjoint_path_counts("cycle", 3).counts == {(0, 0): 1, (1, 1): 3, (1, 2): 3, (1, 3): 1}
    assert disjoint_path_counts("line", 3)[(2, 2)] == 1
    assert disjoint_path_counts("cycle", 5)[(2, 2)] == 5


def test_path_count_errors():
    with pytest.raises(RangeError):
        disjoint_path_counts("cycle", 2)
    with pytest.raises(RangeError):
        disjoint_path_counts("line", 0)
    with pytest.raises(InvalidInputError):
        disjoint_path_counts("tree", 4)
    with pytest.raises(SizeLimitError):
        disjoint_path_counts("line", 21)


@pytest.mark.parametrize("n", range(1, 13))
def test_line_counts_match_binomial_census(n):
    counts = disjoint_path_counts("line", n)
    for (r, w), v in counts.counts.items():
        if r:
            assert v == comb(w - 1, r - 1) * comb(n - w + 1, r)
    assert sum(counts.counts.values()) == 2**n


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_counts_match_binomial_census(n):
    counts = disjoint_path_counts("cycle", n)
    assert counts[(1, n)] == 1
    for (r, w), v in counts.counts.items():
        if r and w < n:
            assert v * r == n * comb(w - 1, r - 1) * comb(n - w - 1, r - 1)
    assert sum(counts.counts.values()) == 2**n


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_generator_census(n):
    # n single-path classes in every homological degree below n, one at degree n
    counts = disjoint_path_counts("cycle", n)
    assert [counts[(1, w)] for w in range(1, n + 1)] == [n] * (n - 1) + [1]


@pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 7) for d in (3, 4, 5)])
def test_froberg_matches_hyperline(n, d):
    nv = n * d - (n - 1)
    assert froberg_poincare(nv, disjoint_path_counts("line", n)) == cf.poincare_hyperline(n, d, 1).series


@pytest.mark.parametrize("n,d", [(n, d) for n in range(3, 8) for d in (3, 4, 5)])
def test_froberg_matches_hypercycle(n, d):
    assert froberg_poincare(n * (d - 1), disjoint_path_counts("cycle", n)) == cf.poincare_hypercycle(n, d, 1).series


def test_froberg_examples():
    assert froberg_poincare(6, disjoint_path_counts("cycle", 3)) == rf((ONE_PLUS_T**6).coeffs, [1, 0, -3, -3, -1])
    assert froberg_poincare(5, disjoint_path_counts("line", 2)) == rf((ONE_PLUS_T**5).coeffs, [1, 0, -2, -1])
    assert froberg_poincare(4, BigradedCounts()) == RationalFunction(ONE_PLUS_T**4)


def test_top_cycle_term_adds_the_full_cycle_class():
    counts = disjoint_path_counts("cycle", 4)
    without = BigradedCounts({k: v for k, v in counts.counts.items() if k != (1, 4)})
    assert froberg_denominator(without, top_cycle_term=4) == froberg_denominator(counts)


def test_bigraded_counts_validation_and_json():
    with pytest.raises(InvalidInputError):
        BigradedCounts({(1, 1): 2})
    with pytest.raises(InvalidInputError):
        BigradedCounts({(0, 0): 1, (2, 1): 1})
    c = disjoint_path_counts("line", 4)
    assert BigradedCounts.from_json(c.to_json()) == c


def test_taylor_examples():
    assert taylor_is_minimal(build_family(FamilySpec("hyperline", 2, 3, 1)).edges)
    assert not taylor_is_minimal([frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})])
    assert taylor_is_minimal([frozenset({0, 1})])


def test_taylor_errors():
    with pytest.raises(SizeLimitError):
        taylor_is_minimal([frozenset({i, 21 + i}) for i in range(21)])
    with pytest.raises(InvalidInputError):
        taylor_is_minimal([frozenset({0, 1}), frozenset({0, 1})])


@pytest.mark.parametrize("n,d", [(n, d) for n in range(2, 7) for d in (3, 4)])
def test_free_vertex_families_have_minimal_taylor(n, d):
    assert taylor_is_minimal(build_family(FamilySpec("hyperline", n, d, 1)).edges)
    if n >= 3:
        assert taylor_is_minimal(build_family(FamilySpec("hypercycle", n, d, 1)).edges)


@pytest.mark.parametrize("n", range(3, 8))
def test_plain_cycles_are_not_taylor_minimal(n):
    assert not taylor_is_minimal(build_family(FamilySpec("cycle-graph", n)).edges)


def brute_taylor_minimal(gens):
    # the Taylor resolution is minimal iff no nonempty subset has the same lcm as a
    # subset obtained by dropping one generator
    masks = [sum(1 << v for v in g) for g in gens]
    m = len(masks)
    for sub in range(1, 1 << m):
        members = [k for k in range(m) if sub >> k & 1]
        full = 0
        for k in members:
            full |= masks[k]
        for k in members:
            rest = 0
            for j in members:
                if j != k:
                    rest |= masks[j]
            if rest == full and len(members) > 1:
                return False
    return True


@given(st.lists(st.frozensets(st.integers(0, 7), min_size=1, max_size=4), min_size=1, max_size=6, unique=True))
def test_taylor_minimal_matches_bruteforce(gens):
    assert taylor_is_minimal(gens) == brute_taylor_minimal(gens)


def test_golod_equals_star_series_on_random_parameters():
    rng = random.Random(11)
    for _ in range(10):
        d = rng.randint(2, 5)
        a = rng.randint(1, d - 1)
        n = rng.randint(1, 6)
        betti = [comb(n, i) for i in range(1, n + 1)]
        assert golod_poincare(n * (d - a) + a, betti) == cf.poincare_hyperstar(n, d, a).series
