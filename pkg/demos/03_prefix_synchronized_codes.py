# %% [markdown]
# # Prefix-synchronized codes
#
# G_P(N) counts words of length N + p that start with P, contain P again at
# position N, and nowhere in between.  The automaton DP works with exact
# integers; the numpy brute force checks every completion.

# %%
from privwords import brute_force_gp, build_automaton, exact_gp, gp_sequence, list_codewords

aut = build_automaton("aabaa")
for s, row in enumerate(aut.delta):
    print(s, row)

# %%
for P in ["ab", "aba", "aabaa"]:
    print(P, gp_sequence(P, 12))
    assert all(brute_force_gp(P, N).count == exact_gp(P, N).count for N in range(1, 13))

# %% [markdown]
# When P is privileged every codeword is privileged too, which is what makes
# these codes useful for lower bounds.

# %%
print([str(w) for w in list_codewords("aba", 6)])

# %%
big = exact_gp("aabaa", 500).count
print(len(str(big)), "digits")
