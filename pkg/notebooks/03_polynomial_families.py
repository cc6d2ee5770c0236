"""
The q-polynomial families
=========================

Five q-families (Bateman-Z, Bateman, Pasternack, Sylvester, Cesaro)
and their classical counterparts.
"""

# %%
from fractions import Fraction

from qident import families as fam
from qident.qcore import QBase

# %% [markdown]
# With q = 1/2 (no rational square root, so built from q directly):

# %%
base = QBase.from_q(Fraction(1, 2))
print(fam.q_batemanz(1, 1, base))                      # 4
print(fam.q_cesaro(1, 1, 1, base))                     # 2
print(fam.cesaro_closed_form(1, 1, 1, base))           # 2, by the closed form
print(fam.q_sylvester(1, 2, Fraction(1, 4), base))     # 11/2

# %% [markdown]
# q-exponentials such as a = q^((z+1)/2) are independent rationals, so a
# non-integer z needs no irrational arithmetic.

# %%
base = QBase(Fraction(3, 5))
print([fam.q_bateman(n, Fraction(2, 7), base) for n in range(4)])

# %% [markdown]
# The q-Pasternack polynomial at mu = q is the q-Bateman polynomial.

# %%
print(all(fam.q_pasternack(n, Fraction(2, 7), base.q, base) == fam.q_bateman(n, Fraction(2, 7), base)
          for n in range(10)))

# %% [markdown]
# Classical families and their orthogonal-polynomial connections.

# %%
z = Fraction(5, 3)
print([fam.sylvester(n, z) for n in range(4)])
print([(-1) ** n * fam.laguerre(n, -z - n, z) for n in range(4)])
print(fam.cesaro(3, 2, z), fam.jacobi(3, 3, -6, 2 * z - 1))
print(fam.legendre(2, 3))
