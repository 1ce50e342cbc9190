from functools import lru_cache

import pytest

from planeparts.profiles import parse_profile, profiles_up_to, reverse_negate
from planeparts.series import (
    ProductSpec,
    TruncatedSeries,
    classical_gf,
    cp_gf,
    cp_product_spec,
    dspp_gf,
    dspp_gf_unsimplified,
    dspp_product_spec,
    expand_product,
    phi_series,
    psi_series,
    scp_gf,
    scp_gf_unsimplified,
    scp_product_spec,
    series_mul,
)

PARTITION_NUMBERS = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135)


@lru_cache(maxsize=None)
def restricted_count(n, parts):
    """Independent oracle: partitions of n into parts from the given multiset."""
    parts = tuple(parts)
    if n == 0:
        return 1
    if not parts or n < 0:
        return 0
    head, tail = parts[0], parts[1:]
    total = 0
    k = 0
    while k * head <= n:
        total += restricted_count(n - k * head, tail)
        k += 1
    return total


def brute_plane_partition_count(n):
    """Independent oracle: monotone fillings of an n-by-n grid with total n."""
    cells = [(i, j) for i in range(n) for j in range(n)]
    values = {}
    count = 0

    def rec(idx, total):
        nonlocal count
        if total == n:
            count += 1
            return
        if idx == len(cells):
            return
        i, j = cells[idx]
        cap = n - total
        if i > 0:
            cap = min(cap, values[(i - 1, j)])
        if j > 0:
            cap = min(cap, values[(i, j - 1)])
        for v in range(cap + 1):
            values[(i, j)] = v
            rec(idx + 1, total + v)
        del values[(i, j)]

    rec(0, 0)
    return count


def test_series_construction_and_identity():
    one = TruncatedSeries.one(4)
    assert one.coeffs == (1, 0, 0, 0, 0)
    s = TruncatedSeries(2, (1, 2, 3))
    assert series_mul(s, TruncatedSeries.one(2)) == s
    with pytest.raises(ValueError):
        TruncatedSeries(2, (1, 2))


def test_series_mul_examples():
    a = TruncatedSeries(2, (1, 1, 0))  # 1 + z
    b = TruncatedSeries(2, (1, -1, 0))  # 1 - z
    assert (a * b).coeffs == (1, 0, -1)
    geo = TruncatedSeries(5, (1,) * 6)
    one_minus = TruncatedSeries(5, (1, -1, 0, 0, 0, 0))
    assert (geo * one_minus) == TruncatedSeries.one(5)
    with pytest.raises(ValueError):
        a * TruncatedSeries.one(3)


def test_series_immutable():
    s = TruncatedSeries.one(2)
    with pytest.raises(AttributeError):
        s.order = 5


def test_expand_product_examples():
    spec = ProductSpec(((1, 1, 1),))
    assert expand_product(spec, 5).coeffs == PARTITION_NUMBERS[:6]
    assert expand_product(ProductSpec(()), 4) == TruncatedSeries.one(4)
    scpa = ProductSpec(((5, 1, 1), (5, 3, 1), (5, 5, 1), (10, 4, 1)))
    assert expand_product(scpa, 5)[5] == 4


def test_expand_product_nonnegative_and_normalized():
    spec = ProductSpec(((2, 1, 1), (2, 1, 1), (3, 2, 2)))
    assert spec.factors == ((2, 1, 2), (3, 2, 2))
    series = expand_product(spec, 12)
    assert series[0] == 1
    assert all(c >= 0 for c in series.coeffs)
    with pytest.raises(ValueError):
        ProductSpec(((0, 1, 1),))
    with pytest.raises(ValueError):
        ProductSpec(((1, 0, 1),))


def test_phi_series_examples():
    assert phi_series([4], 8).coeffs == tuple(1 if n % 4 == 0 else 0 for n in range(9))
    assert phi_series([], 5) == TruncatedSeries.one(5)
    assert phi_series([1, 2], 3).coeffs == (1, 1, 2, 3)
    for n in range(9):
        assert phi_series([1, 2], 8)[n] == restricted_count(n, (1, 2, 3))
    with pytest.raises(ValueError):
        phi_series([0], 3)


def test_psi_series_examples():
    assert psi_series([2], [3], 10).coeffs == tuple(1 if n % 5 == 0 else 0 for n in range(11))
    assert psi_series([], [1], 5) == TruncatedSeries.one(5)
    assert psi_series([1], [], 5) == TruncatedSeries.one(5)
    assert psi_series([1], [1, 2], 4).coeffs == (1, 0, 1, 1, 1)
    for n in range(9):
        assert psi_series([1], [1, 2], 8)[n] == restricted_count(n, (2, 3))


def test_dspp_gf_values():
    # paper-table column: c_5 = 9 for the width-3 all-up profile
    g = dspp_gf(parse_profile("++"), 20)
    assert g[5] == 9 and g[10] == 64 and g[15] == 314 and g[20] == 1244
    # low-order coefficients against the restricted-parts oracle:
    # ordinary parts plus a second copy of parts congruent to 3 mod 6
    parts = tuple(range(1, 13)) + (3, 9)
    for n in range(13):
        assert g[n] == restricted_count(n, parts), n
    assert dspp_gf(parse_profile(""), 5).coeffs == PARTITION_NUMBERS[:6]
    assert dspp_gf(parse_profile("+-"), 1).coeffs == (1, 1)


def test_dspp_gf_reverse_negate_invariance():
    for delta in profiles_up_to(4):
        assert dspp_gf(delta, 10) == dspp_gf(reverse_negate(delta), 10)
    # no such symmetry for the symmetric cylindric family: its weight
    # singles out one end of the half-sequence
    assert scp_gf(parse_profile("+"), 4) != scp_gf(parse_profile("-"), 4)


def test_dspp_staircase_profile_product_form():
    # for the all-down profile of length m-1 the product is the plain
    # partition product times pair factors i+j to modulus 2m
    for m in range(2, 6):
        delta = parse_profile("-" * (m - 1))
        factors = [(1, 1, 1)]
        factors += [(2 * m, i + j, 1) for i in range(1, m - 1) for j in range(i + 1, m)]
        assert dspp_gf(delta, 14) == expand_product(ProductSpec(tuple(factors)), 14), m


def test_cp_gf_values():
    assert cp_gf(parse_profile("+-"), 4).coeffs == (1, 1, 2, 3, 5)
    assert cp_gf(parse_profile("++"), 4).coeffs == (1, 0, 1, 0, 2)
    with pytest.raises(ValueError):
        cp_gf(parse_profile(""), 4)


def test_scp_gf_values():
    g = scp_gf(parse_profile("--"), 20)
    assert g[5] == 4 and g[10] == 17 and g[15] == 56 and g[20] == 161
    # explicit product for the up-down profile: parts 3,4,5 mod 5 and 2 mod 10
    h = scp_gf(parse_profile("+-"), 5)
    explicit = expand_product(ProductSpec(((5, 3, 1), (5, 4, 1), (5, 5, 1), (10, 2, 1))), 5)
    assert h == explicit
    # the empty profile degenerates to the plain partition product
    assert scp_gf(parse_profile(""), 6).coeffs == PARTITION_NUMBERS[:7]


def test_unsimplified_forms_agree():
    for delta in profiles_up_to(3):
        assert dspp_gf_unsimplified(delta, 12) == dspp_gf(delta, 12), delta
        assert scp_gf_unsimplified(delta, 12) == scp_gf(delta, 12), delta


def test_classical_gf():
    pp = classical_gf("pp", 5)
    assert pp.coeffs == (1, 1, 3, 6, 13, 24)
    for n in range(5):
        assert pp[n] == brute_plane_partition_count(n), n
    assert classical_gf("shiftpp", 0) == TruncatedSeries.one(0)
    assert classical_gf("sympp", 3).coeffs == (1, 1, 1, 2)
    # shifted plane partitions: parts 1.. plus pair parts i+j (i<j)
    sh = classical_gf("shiftpp", 6)
    parts = tuple(range(1, 7)) + (3, 4, 5, 5, 6, 6)  # i+j <= 6 pairs: 1+2..2+4
    for n in range(7):
        assert sh[n] == restricted_count(n, parts), n
    with pytest.raises(ValueError):
        classical_gf("nope", 3)


def test_truncation_consistency():
    for delta in profiles_up_to(2):
        full = dspp_gf(delta, 16)
        assert full.truncate(9) == dspp_gf(delta, 9)
    full = classical_gf("pp", 12)
    assert full.truncate(7) == classical_gf("pp", 7)
    full = scp_gf(parse_profile("-+"), 15)
    assert full.truncate(8) == scp_gf(parse_profile("-+"), 8)


def test_product_spec_merge_and_gcd():
    a = ProductSpec(((2, 2, 1),))
    b = ProductSpec(((4, 2, 1),))
    assert a.overall_gcd() == 2
    merged = a.merged_with(b)
    assert merged.factors == ((2, 2, 1), (4, 2, 1))
    assert merged.overall_gcd() == 2
    assert ProductSpec(((2, 2, 1), (3, 1, 1))).overall_gcd() == 1


def test_family_specs_match_multisets():
    spec = dspp_product_spec(parse_profile("++"))
    assert spec.factors == ((3, 1, 1), (3, 2, 1), (3, 3, 1), (6, 3, 1))
    # the other two width-3 displays: a squared factor and a shifted one
    spec = dspp_product_spec(parse_profile("+-"))
    assert spec.factors == ((3, 2, 2), (3, 3, 1), (6, 1, 1))
    spec = dspp_product_spec(parse_profile("-+"))
    assert spec.factors == ((3, 1, 2), (3, 3, 1), (6, 5, 1))
    spec = cp_product_spec(parse_profile("+-"))
    assert spec.factors == ((2, 1, 1), (2, 2, 1))
    spec = scp_product_spec(parse_profile("--"))
    assert spec.factors == ((5, 1, 1), (5, 3, 1), (5, 5, 1), (10, 4, 1))
    spec = scp_product_spec(parse_profile("+-"))
    assert spec.factors == ((5, 3, 1), (5, 4, 1), (5, 5, 1), (10, 2, 1))
    spec = scp_product_spec(parse_profile("++"))
    assert spec.factors == ((5, 2, 1), (5, 4, 1), (5, 5, 1), (10, 6, 1))
