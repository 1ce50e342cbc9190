#!/usr/bin/env python3
"""Numeric verification of the skew Schur summation identities.

Substituting each alphabet variable by a power of z turns every
summation formula into an equality of univariate series.  The left side
is summed by a transfer dynamic program over interlacing partitions;
the right side is an independent product of geometric factors.
"""

import time

from planeparts import (
    parse_profile,
    run_battery,
    skew_schur_z,
    verify_lemma_s1,
    verify_macdonald,
    verify_summation,
)

print("=== specialized skew Schur values ===")
print("s_(2) in variables z, z    :", list(skew_schur_z((2,), (), (1, 1), 6).coeffs))
print("s_(2,1) in variables z,z^2 :", list(skew_schur_z((2, 1), (), (1, 2), 8).coeffs))
print("s_(1,1) in one variable    :", list(skew_schur_z((1, 1), (), (1,), 4).coeffs))

print()
print("=== one summation formula in detail ===")
r = verify_summation("complete", parse_profile("+-"), (1, 2), order=10)
print("complete, profile +-, exponents (1,2):")
print("  lhs:", list(r.lhs))
print("  rhs:", list(r.rhs))
print("  equal:", r.passed)

r = verify_summation("cylindric", parse_profile("-+"), (2, 1), order=10)
print("cylindric, profile -+, exponents (2,1): equal:", r.passed)

r = verify_summation(
    "open", parse_profile("+-"), (1, 1), endpoints=((2, 1), (1, 1)), order=10
)
print("open, profile +-, endpoints [2,1]/[1,1]: equal:", r.passed)

print()
print("=== the two lemmas and a textbook identity ===")
print("lemma 1, alphabet (1,2)   :", verify_lemma_s1((1, 2), order=10).passed)
print("textbook p94A, (1),(2)    :", verify_macdonald("p94A", (1,), (2,), order=10).passed)
print(
    "textbook p93A, outer (2,1):",
    verify_macdonald("p93A", (1,), (2,), lam=(2, 1), mu=(1, 1), order=10).passed,
)

print()
print("=== the full battery ===")
start = time.time()
reports = run_battery(max_len=3, order=8)
failures = [r for r in reports if not r.passed]
print("cases: %d   failures: %d   (%.1fs)" % (len(reports), len(failures), time.time() - start))
kinds = {}
for r in reports:
    kinds[r.name] = kinds.get(r.name, 0) + 1
for name in sorted(kinds):
    print("  %-10s %4d cases" % (name, kinds[name]))
