"""
Basic hypergeometric series
===========================

PhiSpec describes an r_phi_s (or, with no base, a pFq).  Terminating
scalar series evaluate to a Fraction; series whose parameters involve t
expand to a TruncatedSeries.
"""

# %%
from fractions import Fraction

from qident.hyper import LinearT, Pair, Zero, f_eval_scalar, hyp, phi, phi_eval_scalar, phi_series, phi_series_direct
from qident.qcore import QBase, qpoch_inf_reciprocal_series, qpoch_inf_series

base = QBase(Fraction(2, 3))
p, q = base.p, base.q

# %% [markdown]
# The degree-1 q-Bateman-Z kernel: 2phi2(q^-1, q^2; q, q; q, q z).

# %%
z = Fraction(-5, 3)
print(phi_eval_scalar(phi([1 / q, q * q], [q, q], q * z, base)))
print(1 + (1 + q) * z / (1 - q))

# %% [markdown]
# The q-binomial theorem in action: a 1phi0 with argument t equals a
# ratio of infinite products.

# %%
a = Fraction(-3, 5)
lhs = phi_series(phi([a], [], LinearT(1), base), 10)
rhs = qpoch_inf_series(a, base, 10) * qpoch_inf_reciprocal_series(1, base, 10)
print(lhs == rhs)

# %% [markdown]
# A Pair(c) stands for the two parameters +c t^(1/2), -c t^(1/2).  Their
# product has integer powers of t only.  The fast expansion and the
# from-scratch one agree.

# %%
spec = phi([-q, p, -p, Fraction(3, 4), Zero()], [q, Pair(p), Pair(q)], LinearT(1), base)
print(spec.r, spec.s, spec.compensation)
print(phi_series(spec, 6) == phi_series_direct(spec, 6))

# %% [markdown]
# Classical pFq evaluate with rising factorials.

# %%
print([f_eval_scalar(hyp([-1, 2, -n], [1, 1], 1)) for n in range(6)])
