# %% [markdown]
# # Forward substitution versus the Phi closed form
#
# Both solve the same triangular system.  The closed form needs Phi_r for
# every r up to the degree; grouping the partition sum by multiplicities
# keeps that affordable even where listing partitions would not be.

# %%
import time

from gaussian_partitions import gaussian_by_division, gaussian_by_recurrence
from gaussian_partitions.toeplitz import gaussian_system, solve_forward, toeplitz_sequence
from gaussian_partitions.partitions import count_partitions


def clock(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


# %%
print(f"{'n,m':>6} {'p(nm)':>10} {'division':>10} {'recurrence':>11} {'forward':>9} {'closed':>9}")
for k in (4, 6, 8, 10, 12):
    top = k * k
    div, t_div = clock(gaussian_by_division, k, k)
    rec, t_rec = clock(gaussian_by_recurrence, k, k)
    fwd, t_fwd = clock(lambda: solve_forward(gaussian_system(k, k, top), top))
    clo, t_clo = clock(toeplitz_sequence, k, k, top)
    assert div.values() == rec.values() == fwd == clo
    print(f"{k:>3},{k:<2} {count_partitions(top):>10} {t_div:>10.4f} {t_rec:>11.4f} {t_fwd:>9.4f} {t_clo:>9.4f}")
