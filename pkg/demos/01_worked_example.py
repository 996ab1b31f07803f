# %% [markdown]
# # P_3^2 by the triangular Toeplitz closed form
#
# Count solutions of x_1 + 2 x_2 = s with x_1 + x_2 <= 3, i.e. partitions of
# s into at most three parts, each at most 2.  We rebuild the answer from
# unconstrained counts only.

# %%
from gaussian_partitions import build_phi, eval_phi, gaussian_by_division
from gaussian_partitions.partitions import consecutive_table

n, m = 3, 2
W2, W3, W5 = (consecutive_table(k, 10) for k in (2, 3, 5))
print("W_2:", list(W2[:6]))
print("W_3:", list(W3[:6]))
print("W_5:", list(W5[:6]))

# %% [markdown]
# The right-hand side T(g) is the convolution W_3 * W_2; the coupling is
# U(k) = -W_5(k).

# %%
T = [sum(W3[s] * W2[g - s] for s in range(g + 1)) for g in range(11)]
U = lambda k: -W5[k]
print("T:", T)

# %% [markdown]
# Phi_r has one term per partition of r.  Evaluated at U these are the
# only numbers the closed form needs.

# %%
for r in range(6):
    phi = build_phi(r)
    print(f"Phi_{r} = {phi}    ->  {eval_phi(phi, U)}")

# %%
phis = [eval_phi(build_phi(r), U) for r in range(10)]
P = [1] + [sum((T[g - r] + U(g - r)) * phis[r] for r in range(g)) for g in range(1, 10)]
print("closed form:", P)
print("G(3,2;t):   ", gaussian_by_division(n, m).coeffs)
