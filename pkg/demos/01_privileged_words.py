# %% [markdown]
# # Privileged words
#
# A word is privileged when it is a single letter, or when it has a
# privileged border that occurs in it exactly twice.  `privileged_witness`
# returns the nested chain of such borders.

# %%
from privwords import count_privileged, is_privileged, list_privileged, privileged_witness

for w in ["a", "ab", "aabaa", "abba", "abaab", "aabaabaa"]:
    chain = privileged_witness(w)
    shown = " <- ".join(map(str, chain)) if chain else "-"
    print(f"{w:10s} privileged={is_privileged(w)!s:5s} witness: {shown}")

# %% [markdown]
# Exhaustive counts B(n, q).  The search is split into shards by the first
# symbols; the count does not depend on the number of shards.

# %%
print(" n  B(n,2)   B(n,2) n^2 / 2^n")
for n in range(1, 19):
    b = count_privileged(n, 2, shards=4, workers=1).count
    print(f"{n:2d} {b:7d}   {b * n * n / 2**n:8.4f}")

# %%
print([str(w) for w in list_privileged(6, 2)])
print(count_privileged(7, 3).count, "ternary privileged words of length 7")
