# %% [markdown]
# The additive form of Macaulay's theorem
# =======================================
#
# In N^n with B the unit vectors, among all subsets A of hB of a given size the
# lexsegment minimizes |A + B|. Check it over every subset for small cases.

# %%
from sumset_growth import additive_macaulay_check, bound_report, naive_sumset_powers

for n, h in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]:
    rep = additive_macaulay_check(n, h)
    print(f"n={n} h={h}: {rep.tested:>5} subsets, {len(rep.violations)} violations, "
          f"largest gap {rep.max_gap} at {rep.max_gap_example}")

# %% [markdown]
# Sumsets of integers obey d_{h+1} <= d_h^<h>. Here are a few sets,
# from arithmetic progressions (slow growth) to Sidon-like sets (fast growth).

# %%
for A in ([0, 1, 2, 3], [0, 1, 3], [0, 1, 4, 9, 16], [0, 1, 3, 7, 12, 20]):
    sizes = naive_sumset_powers(A, 5)
    print(A, "->", tuple(sizes))
    for r in bound_report(sizes):
        print(f"   h={r.h}: {r.next_size:>4} <= macaulay {r.macaulay:>4}, plunnecke {r.plunnecke:>5}")
