"""
Truncated power series and q-Pochhammer symbols
===============================================

Everything in qident lives in the ring of power series in t cut off at
some order N, with exact rational coefficients.
"""

# %%
from fractions import Fraction

from qident.qcore import QBase, q_binomial, qpoch_finite_in_t, qpoch_inf_reciprocal_series, qpoch_inf_series
from qident.series import TruncatedSeries, series_compose

# %% [markdown]
# A series is a coefficient list; its order is the last kept power.

# %%
one_minus_t = TruncatedSeries([1, -1, 0, 0, 0, 0])
geometric = 1 / one_minus_t
print(geometric)                      # 1 + t + t^2 + ...
print(one_minus_t * geometric)        # exactly 1 to order 5

# %% [markdown]
# Composition substitutes one series into another; the inner one must
# vanish at t = 0 unless the outer one is a polynomial.

# %%
t_over = TruncatedSeries([0, 1, 0, 0]).div_linear(1)     # t / (1 - t)
print(series_compose(TruncatedSeries([1, 1, 1, 1]), t_over))

# %% [markdown]
# The base is stored as p = q^(1/2).  p = 1/2 means q = 1/4.

# %%
base = QBase(Fraction(1, 2))
print(base.q, base.half_pow(3))

# %%
print([q_binomial(4, k, base) for k in range(5)])
print(qpoch_finite_in_t(1, 3, base, 6))    # (t; q)_3

# %% [markdown]
# Infinite products come from Euler's coefficient formulas, so they are
# exact to every kept order; their product is 1.

# %%
euler = qpoch_inf_series(Fraction(2, 3), base, 8)
print(euler)
print(euler * qpoch_inf_reciprocal_series(Fraction(2, 3), base, 8))
