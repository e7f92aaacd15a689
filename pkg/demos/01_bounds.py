# %% [markdown]
# Bounds on the growth of iterated sumsets
# ========================================
#
# Suppose A is a finite subset of an abelian semigroup and we know |6A| = 1000.
# How large can |7A| be, and how small can |5A| be?

# %%
from sumset_growth import h_binomial_rep, macaulay_lower_inverse, macaulay_upper
from sumset_growth.macaulay import plunnecke_lower, plunnecke_upper

# %% [markdown]
# Plünnecke's inequality |hA| <= |iA|^(h/i), evaluated with exact integer roots:

# %%
print("Plünnecke: |7A| <=", plunnecke_upper(1000, 6, 7))
print("Plünnecke: |5A| >=", plunnecke_lower(1000, 6, 5))

# %% [markdown]
# The Macaulay operator works on the 6-binomial representation of 1000 and
# bumps every binomial coefficient up by one in both slots.

# %%
rep = h_binomial_rep(1000, 6)
print("1000 =", rep)
print("shifted:", " + ".join(f"C({a},{j})" for a, j in rep.shifted()))
print("Macaulay: |7A| <=", macaulay_upper(1000, 6))

# %% [markdown]
# Running the operator backwards gives a lower bound for the previous step:
# the least a with a^<5> >= 1000.

# %%
lo = macaulay_lower_inverse(1000, 5)
print("Macaulay: |5A| >=", lo, " check:", macaulay_upper(lo, 5), macaulay_upper(lo - 1, 5))

# %% [markdown]
# A sweep over |hA| = a for a few h shows how much tighter the Macaulay bound
# usually is. Nothing guarantees it is tighter for every input, so this
# simply tabulates both.

# %%
print(f"{'h':>2} {'a':>6} {'macaulay':>9} {'plunnecke':>10}")
for h in (1, 2, 4, 6):
    for a in (10, 100, 1000, 10000):
        print(f"{h:>2} {a:>6} {macaulay_upper(a, h):>9} {plunnecke_upper(a, h, h + 1):>10}")
