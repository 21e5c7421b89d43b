# %% [markdown]
# # The lower-bound chain
#
# For block length N the prefix length is the unique p with
# ln(q)/(q-1) q^p <= N < ln(q)/(q-1) q^(p+1).  Summing G_P(N) over privileged
# P of that length gives a lower bound on B(N + p, q).

# %%
from privwords import choose_p, lower_bound_sweep
from privwords.asymptotics import lemma5_sweep

print([(N, choose_p(N)) for N in (10, 100, 1000, 10**6)])

# %%
for r in lower_bound_sweep(3, 18, 2, exact_budget=2**18):
    print(f"n={r.n:2d} p={r.p} N={r.N:2d} lower={r.lower_sum:6d} B={r.exact_B:6d}")

# %% [markdown]
# The normalized sum, lower_sum * n * (log2 n)^2 / 2^n, stays away from 0.

# %%
reports = lower_bound_sweep(50, 500, 2)
for lo, hi in [(50, 150), (150, 250), (250, 350), (350, 500)]:
    print(lo, hi, min(r.ratio for r in reports if lo <= r.n <= hi))

# %%
print(min(ratio for _, ratio in lemma5_sweep(100)))
