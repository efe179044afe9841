from math import comb

import pytest

from hyperpoincare import closedforms as cf
from hyperpoincare.complex import hochster_betti
from hyperpoincare.errors import InvalidInputError, RangeError, UnsupportedParameterError
from hyperpoincare.exactalg import ONE_MINUS_T, ONE_PLUS_T, Polynomial, RationalFunction, series_expand
from hyperpoincare.hypergraph import FamilySpec, build_family
from hyperpoincare.oracle import bruteforce_hilbert_series


def rf(num, den):
    return RationalFunction(Polynomial(tuple(num)), Polynomial(tuple(den)))


def over_1mt(num, k):
    return RationalFunction(Polynomial(tuple(num)), ONE_MINUS_T**k)


def over_1pt(k, den):
    return RationalFunction(ONE_PLUS_T**k, Polynomial(tuple(den)))


LISTED_HILBERT_LINE = {
    0: over_1mt([1], 1),
    1: over_1mt([1, 1], 1),
    2: over_1mt([1, 1, -1], 2),
    3: over_1mt([1, 2], 2),
    4: over_1mt([1, 2, -1, -1], 3),
    5: over_1mt([1, 3, 1, -1], 3),
}
LISTED_HILBERT_CYCLE = {
    3: over_1mt([1, 2], 1),
    4: over_1mt([1, 2, -1], 2),
    5: over_1mt([1, 3, 1], 2),  # printed with (1-t)^3
    6: over_1mt([1, 3, 0, -2], 3),
}
LISTED_POINCARE_LINE = {
    2: over_1pt(2, [1, -1, -1]),
    3: over_1pt(2, [1, -2]),
    4: over_1pt(3, [1, -2, -1, 1]),
    5: over_1pt(3, [1, -3, 1, 1]),
}
LISTED_POINCARE_CYCLE = {
    3: over_1pt(1, [1, -2]),
    4: over_1pt(2, [1, -2, -1]),
    5: over_1pt(2, [1, -3, 1]),
    6: over_1pt(3, [1, -3, 0, 2]),
}


@pytest.mark.parametrize("n", sorted(LISTED_HILBERT_LINE))
def test_listed_line_hilbert(n):
    assert cf.hilbert_line_closed(n).series == LISTED_HILBERT_LINE[n]


@pytest.mark.parametrize("n", sorted(LISTED_HILBERT_CYCLE))
def test_listed_cycle_hilbert(n):
    assert cf.hilbert_cycle_closed(n).series == LISTED_HILBERT_CYCLE[n]


def test_printed_c5_denominator_is_contradicted_by_counting():
    printed = over_1mt([1, 3, 1], 3)
    truth = bruteforce_hilbert_series(build_family(FamilySpec("cycle-graph", 5)))
    assert truth == LISTED_HILBERT_CYCLE[5]
    assert truth != printed


@pytest.mark.parametrize("n", sorted(LISTED_POINCARE_LINE))
def test_listed_line_poincare(n):
    assert cf.poincare_line_graph(n).series == LISTED_POINCARE_LINE[n]


@pytest.mark.parametrize("n", sorted(LISTED_POINCARE_CYCLE))
def test_listed_cycle_poincare(n):
    assert cf.poincare_cycle_graph(n).series == LISTED_POINCARE_CYCLE[n]


def test_poincare_line_bases():
    assert cf.poincare_line_graph(0).series == RationalFunction(ONE_PLUS_T)
    assert cf.poincare_line_graph(1).series == rf([1, 1], [1, -1])


@pytest.mark.parametrize("n", range(3, 14))
def test_printed_cycle_forms_are_wrong(n):
    # the printed recursion sign and printed denominator fail for every n >= 3 we tried
    assert cf.hilbert_cycle_closed(n, "printed").series != cf.hilbert_cycle_closed(n).series
    assert cf.poincare_cycle_graph(n, "printed").series != cf.poincare_cycle_graph(n).series


@pytest.mark.parametrize("n", range(3, 14))
def test_graph_series_factor_shape(n):
    # line and cycle Poincare series are (1+t)^k over a polynomial with constant term 1
    for p in (cf.poincare_line_graph(n).series, cf.poincare_cycle_graph(n).series):
        num = p.numerator
        k = len(num.coeffs) - 1
        assert num == ONE_PLUS_T**k
        assert p.denominator[0] == 1


@pytest.mark.parametrize("n", range(0, 14))
def test_line_poincare_is_koszul_reciprocal(n):
    assert cf.poincare_line_graph(n).series == cf.hilbert_line_closed(n).series.reflect().reciprocal()


@pytest.mark.parametrize("n", range(3, 14))
def test_cycle_and_wheel_are_koszul_reciprocals(n):
    assert cf.poincare_cycle_graph(n).series == cf.hilbert_cycle_closed(n).series.reflect().reciprocal()
    assert cf.poincare_wheel(n).series == cf.hilbert_wheel_closed(n).series.reflect().reciprocal()


def test_golden_values():
    assert cf.hilbert_wheel_closed(5).series == over_1mt([1, 4], 2)
    assert cf.poincare_wheel(3).series == over_1pt(1, [1, -3])
    assert cf.poincare_wheel(4).series == over_1pt(2, [1, -3, -2])
    assert cf.poincare_hyperline(3, 4, 2).series == over_1pt(6, [1, -2])
    assert cf.poincare_hypercycle(4, 4, 2).series == over_1pt(6, [1, -2, -1])
    assert cf.poincare_hyperstar(2, 2, 1).series == over_1pt(3, [1, 0, -2, -1])


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_d_equals_2alpha_shift(n, alpha):
    line = cf.poincare_hyperline(n, 2 * alpha, alpha).series
    assert line == RationalFunction(ONE_PLUS_T ** ((n + 1) * (alpha - 1))) * cf.poincare_line_graph(n).series
    if n >= 3:
        cyc = cf.poincare_hypercycle(n, 2 * alpha, alpha).series
        assert cyc == RationalFunction(ONE_PLUS_T ** (n * (alpha - 1))) * cf.poincare_cycle_graph(n).series


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_denominator_terms_are_path_counts(n):
    terms = cf.cycle_denominator_terms(n)
    assert terms[(1, n)] == 1
    assert all(v > 0 for v in terms.values())
    # single paths: n paths of each length below n
    assert all(terms[(1, i)] == n for i in range(1, n))


@pytest.mark.parametrize("n,d,a", [(n, d, 1) for n in range(2, 6) for d in (3, 4)])
def test_betti_tables_match_denominator_identity(n, d, a):
    # for a Golod-free Taylor-minimal ring, sum_i beta_i (-1)^i t^j is the K-polynomial
    table = cf.betti_hyperline_closed(n, d, a)
    nv = n * d - (n - 1) * a
    h = bruteforce_hilbert_series(build_family(FamilySpec("hyperline", n, d, a)))
    assert RationalFunction(table.k_polynomial(), ONE_MINUS_T**nv) == h


@pytest.mark.parametrize("n", range(3, 10))
def test_wheel_linear_strand(n):
    closed = cf.betti_wheel_closed(n)
    composed = cf.betti_wheel_compose(n)
    assert closed[(1, 2)] == 2 * n
    for i in range(1, n + 1):
        assert closed[(i, i + 1)] == composed[(i, i + 1)]


@pytest.mark.parametrize("n", range(3, 10))
def test_wheel_compose_alternating_sum(n):
    table = cf.betti_wheel_compose(n)
    h = cf.hilbert_wheel_closed(n).series
    assert RationalFunction(table.k_polynomial(), ONE_MINUS_T ** (n + 1)) == h


@pytest.mark.parametrize("n,d,a", [(2, 2, 1), (3, 2, 1), (4, 3, 1), (3, 3, 2), (2, 5, 2)])
def test_star_betti_totals_are_binomial(n, d, a):
    totals = cf.betti_star_closed(n, d, a).totals()
    assert [totals.get(i, 0) for i in range(n + 1)] == [comb(n, i) for i in range(n + 1)]


def test_star_matches_hochster():
    spec = FamilySpec("hyperstar", 3, 3, 2)
    assert cf.betti_star_closed(3, 3, 2) == hochster_betti(build_family(spec))


def test_errors():
    with pytest.raises(RangeError):
        cf.hilbert_line_closed(-2)
    with pytest.raises(RangeError):
        cf.poincare_cycle_graph(2)
    with pytest.raises(InvalidInputError):
        cf.hilbert_cycle_closed(5, "guess")
    with pytest.raises(UnsupportedParameterError):
        cf.poincare_hyperline(3, 5, 3)
    with pytest.raises(UnsupportedParameterError):
        cf.betti_hyperline_closed(3, 4, 2)


def test_series_result_json():
    res = cf.hilbert_cycle_closed(5)
    obj = res.to_json()
    assert RationalFunction.from_json(obj) == res.series
    assert series_expand(res.series, 3) == [1, 5, 10, 15]
