#!/usr/bin/env python3
"""Growth of the counting sequences, and how fast the estimates land.

Each family's coefficients grow like C * n^(-e) * exp(c sqrt(n)).  The
parameters come out of the factor sums of the product (the generic
route) or out of closed-form constants (gamma products); both routes
must agree.  For the doubled shifted family both the exponential rate
and the n-exponent are functions of the width alone, and the estimate
sits close to the exact count well before n reaches 20.
"""

import math

from planeparts import (
    count_dspp,
    dspp_params,
    dspp_prefactor,
    dspp_width_constant,
    growth_rate,
    n_exponent,
    parse_profile,
    prefactor,
    psi_eval,
    psi_table_value,
    scp_gf,
    scp_n_exponent_fraction,
    scp_params,
    dspp_gf,
)
from planeparts.asymptotics import dspp_ribbon_params, scp_ribbon_params

print("=== doubled shifted family, width 3 ===")
for text in ("++", "+-", "-+", "--"):
    params = dspp_params(parse_profile(text))
    print(
        "dspp %-3s  prefactor %.6f   rate %.6f   n-exponent %.2f"
        % (text, prefactor(params), growth_rate(params), n_exponent(params))
    )
print("the rate and the n-exponent are width-only; the prefactor varies.")
print("prefactor of ++ is sqrt(7)/24 = %.10f" % (math.sqrt(7) / 24))

print()
print("=== two routes to the same parameters ===")
for text in ("+-", "--+"):
    delta = parse_profile(text)
    a = dspp_params(delta)
    b = dspp_ribbon_params(delta)
    print(
        "dspp %-4s closed (v=%.9f, r=%.9f)  factor sums (v=%.9f, r=%.9f)"
        % (text, a.v, a.r, b.v, b.r)
    )
    a = scp_params(delta)
    b = scp_ribbon_params(delta)
    print(
        "scp  %-4s closed (v=%.9f, r=%.9f)  factor sums (v=%.9f, r=%.9f)"
        % (text, a.v, a.r, b.v, b.r)
    )

print()
print("=== width constants ===")
for m in (2, 3, 4, 5):
    print(
        "width %d: constant %.8f  (staircase prefactor %.8f)"
        % (m, dspp_width_constant(m), dspp_prefactor(parse_profile("-" * (m - 1))))
    )

print()
print("=== symmetric cylindric: the n-exponent moves with the profile ===")
for text in ("--", "-+", "+-", "++"):
    frac = scp_n_exponent_fraction(parse_profile(text))
    print("scp %-3s  n-exponent %s = %.2f" % (text, frac, float(frac)))

print()
print("=== estimate vs exact ===")
dsppa = parse_profile("++")
params = dspp_params(dsppa)
exact = count_dspp(dsppa, 20)
print("dspp ++:  n   exact   estimate   ratio")
for n in (5, 10, 15, 20):
    est = psi_eval(params, n)
    print("        %3d  %6d   %8d   %.4f" % (n, exact[n], psi_table_value(params, n), est / exact[n]))

scpa = parse_profile("--")
sparams = scp_params(scpa)
sexact = scp_gf(scpa, 20)
print("scp  --:  n   exact   estimate   ratio")
for n in (5, 10, 15, 20):
    est = psi_eval(sparams, n)
    print("        %3d  %6d   %8d   %.4f" % (n, sexact[n], psi_table_value(sparams, n), est / sexact[n]))

print()
print("already at n = 20 the estimates sit within a few percent,")
print("which is the point of comparing them against exact expansion.")
print()
print("plain partitions for contrast (slower to converge):")
from planeparts import ProductSpec, expand_product, ribbon_params

spec = ProductSpec(((1, 1, 1),))
pparams = ribbon_params(spec)
pexact = expand_product(spec, 100)
for n in (20, 50, 100):
    print("  n=%3d  ratio %.4f" % (n, psi_eval(pparams, n) / pexact[n]))

print()
print("dspp ++ exact column, for the record:", [dspp_gf(dsppa, 20)[n] for n in (5, 10, 15, 20)])
