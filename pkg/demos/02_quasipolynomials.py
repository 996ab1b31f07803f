# %% [markdown]
# # W_m(s) as quasi-polynomials
#
# W_m(s) is a polynomial of degree m-1 in s whose coefficients repeat with
# some period.  The builtins are fitted exactly from the DP counts.

# %%
from fractions import Fraction

from gaussian_partitions import builtin_w
from gaussian_partitions.partitions import consecutive_table
from gaussian_partitions.quasipoly import reference_residual

for m in (2, 3, 5):
    q = builtin_w(m)
    print(f"W_{m}: period {q.period}, polynomial part {[str(c) for c in q.poly_coeffs]}")

# %% [markdown]
# The linear coefficient of W_5 alternates: 85/192 plus (-1)^s/64.

# %%
print(builtin_w(5).coeffs[1])

# %% [markdown]
# Checking the tabulated closed form of W_5 against the counts.  The
# difference is exactly -(2/25) cos(2 pi s/5), a term missing from the table;
# values are printed as a + b*sqrt(5).

# %%
for s in range(6):
    a, b = reference_residual(5, s)
    print(s, consecutive_table(5, s)[s], f"residual = {a} + {b}*sqrt(5)")

# %%
q = builtin_w(5)
big = 10**6
print(f"W_5({big}) = {q.evaluate(big)}")
