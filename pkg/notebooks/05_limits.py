"""
Numeric q -> 1 limits
=====================

The classical identities are q -> 1 limits of the q ones.  These checks
evaluate the q side at q = 1 - 2^-(k+3) in 256-bit floating point and
watch the error shrink.
"""

# %%
from fractions import Fraction

import mpmath

from qident.limits import limit_check

# %% [markdown]
# (1 - q)^n / (q;q)_n tends to 1/n!.  The error halves each time 1 - q
# halves: first-order convergence.

# %%
report = limit_check("LIM-FACT", {"n": 3})
for q, err in report.steps:
    print(mpmath.nstr(q, 10), mpmath.nstr(err, 5))
print("rate", report.rate, report.status)

# %% [markdown]
# The generating function of the negative-odd q-Pasternack values tends
# to the classical closed form (1+t)/(1-t)^2 at m = 1.

# %%
report = limit_check("LIM-COR-J", {"m": 1, "j": 0, "t": Fraction(1, 4)})
print(mpmath.nstr(report.target, 10), mpmath.nstr(report.final_error, 5), report.status)

# %%
for limit_id in ("LIM-EXP", "LIM-PHI22", "LIM-L11"):
    r = limit_check(limit_id)
    print(limit_id, r.point, r.status, round(r.rate, 3))
