#!/usr/bin/env python3
"""Tour of the product generating functions.

Each family of fillings is counted by a product over an exponent
multiset derived from the profile: factors 1/(1-z^(base*k + t)) with
k >= 0 and t running over the multiset.  This script builds the
multisets for a few profiles, expands the products, and shows that the
raw and simplified product forms agree coefficient by coefficient.
"""

from planeparts import (
    classical_gf,
    cp_gf,
    dspp_gf,
    dspp_gf_unsimplified,
    multiset_w1,
    multiset_w2,
    multiset_w3,
    multiset_w4,
    multiset_w5,
    parse_profile,
    scp_gf,
    scp_gf_unsimplified,
)

ORDER = 16

print("=== exponent multisets per profile ===")
for text in ("++", "+-", "-+", "--"):
    delta = parse_profile(text)
    print(
        "profile %-3s  w1=%-12s w2=%-8s w3=%-8s w4=%-12s w5=%s"
        % (
            text,
            multiset_w1(delta).elements(),
            multiset_w2(delta).elements(),
            multiset_w3(delta).elements(),
            multiset_w4(delta).elements(),
            multiset_w5(delta).elements(),
        )
    )

print()
print("=== skew doubled shifted plane partitions (diagonal width 3) ===")
for text in ("++", "+-", "-+", "--"):
    g = dspp_gf(parse_profile(text), ORDER)
    print("dspp %-3s -> %s" % (text, list(g.coeffs)))

print()
print("the staircase profile of width m reduces to plain partitions")
print("times pair factors; width 2 is exactly the partition numbers:")
print("dspp -   ->", list(dspp_gf(parse_profile("-"), ORDER).coeffs))

print()
print("=== cylindric partitions ===")
for text in ("+-", "++", "++-"):
    g = cp_gf(parse_profile(text), ORDER)
    print("cp   %-3s -> %s" % (text, list(g.coeffs)))

print()
print("=== symmetric cylindric partitions ===")
for text in ("--", "+-", "++"):
    g = scp_gf(parse_profile(text), ORDER)
    print("scp  %-3s -> %s" % (text, list(g.coeffs)))

print()
print("=== the simplification is an executable identity ===")
for text in ("", "+", "-+", "+--"):
    delta = parse_profile(text)
    raw = dspp_gf_unsimplified(delta, 12)
    slick = dspp_gf(delta, 12)
    print("dspp %-4s raw == simplified: %s" % (repr(text), raw == slick))
for text in ("-", "--", "+-+"):
    delta = parse_profile(text)
    print(
        "scp  %-4s raw == simplified: %s"
        % (repr(text), scp_gf_unsimplified(delta, 12) == scp_gf(delta, 12))
    )

print()
print("=== the three classical series ===")
print("plane partitions          :", list(classical_gf("pp", 12).coeffs))
print("shifted plane partitions  :", list(classical_gf("shiftpp", 12).coeffs))
print("symmetric plane partitions:", list(classical_gf("sympp", 12).coeffs))
