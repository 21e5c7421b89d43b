# %% [markdown]
# # Autocorrelation and the correlation polynomial
#
# Bit t of the autocorrelation is 1 when the pattern overlaps itself after a
# shift by t.  The correlation polynomial puts z^(p-1-t) on every set bit, so
# its leading coefficient is always 1.

# %%
from privwords import autocorrelation, border_lengths, correlation_polynomial

for P in ["aaab", "aaa", "aba", "aabaa", "abaabaab"]:
    Q = autocorrelation(P)
    f = correlation_polynomial(Q)
    print(f"{P:10s} borders={border_lengths(P)!s:12s} Q={Q}  f(z)={f}  f(2)={f.exact(2)}  f'(2)={f.derivative_exact(2)}")

# %% [markdown]
# f(q) always sits between q^(p-1) and (q^p - 1)/(q - 1).

# %%
import itertools

q, p = 2, 8
values = [correlation_polynomial("".join(w)).exact(q) for w in itertools.product("ab", repeat=p)]
print(min(values), q ** (p - 1), "|", max(values), (q**p - 1) // (q - 1))
