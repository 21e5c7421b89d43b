# %% [markdown]
# # Dominant root and R_Q
#
# G_P(N) ~ R_Q rho^N where rho is the zero of 1 + (z - q) f(z) just below q.

# %%
from privwords import correlation_polynomial, dominant_root, expansions, gp_sequence, r_q_constant

f = correlation_polynomial("aaab")
root = dominant_root(f, 2)
rq = r_q_constant(f, 2, root)
print(f"rho = {root.rho:.17g}, R_Q = {rq:.17g}")

# %% [markdown]
# For P = aaab the polynomial 1 + (z - 2) z^3 also vanishes at z = 1, so the
# error R_Q rho^N - G_P(N) settles at a constant (1/2) rather than decaying.
# The relative error still falls like rho^-N.

# %%
seq = gp_sequence("aaab", 40)
for N in (10, 20, 30, 40):
    est = rq * root.rho**N
    print(f"N={N:2d} G={seq[N - 1]:>12d} estimate={est:20.6f} error={est - seq[N - 1]: .6f}")

# %% [markdown]
# Four-term expansions of ln rho and ln R_Q get better as p grows.

# %%
for p in range(5, 15):
    r = expansions("a" * (p - 1) + "b")
    print(f"p={p:2d}  ln rho residual {r.ln_rho_residual:.3e}   ln R_Q residual {r.ln_RQ_residual:.3e}")

print("no root above 1.7 for 'aa':", end=" ")
try:
    dominant_root(correlation_polynomial("aa"), 2)
except ArithmeticError as exc:
    print(type(exc).__name__)
