# %% [markdown]
# Almost-sharp realization by a lexideal
# ======================================
#
# Take the admissible sequence (1, 5, 13, 25, 42, 63). We build the lexideal L
# in 5 variables whose quotient has exactly this Hilbert function, then look at
# the powers of A = {x_1, ..., x_5} inside the monomials modulo L.

# %%
from sumset_growth import build_lexideal, hilbert_function, monomial_quotient_powers, validate_sequence
from sumset_growth.macaulay import macaulay_upper, num_monomials

seq = (1, 5, 13, 25, 42, 63)
print(validate_sequence(seq))
print("Macaulay bounds d_i^<i>:", [macaulay_upper(seq[i], i) for i in range(1, 5)])

# %%
L = build_lexideal(seq)
print(f"{'i':>2} {'|M_i|':>6} {'|L_i|':>6} {'d_i':>4} {'|G_i|':>6}")
for i in range(1, L.D + 1):
    print(f"{i:>2} {num_monomials(5, i):>6} {L.segment_sizes[i]:>6} "
          f"{hilbert_function(L, i):>4} {len(L.generators[i]):>6}")
print("minimal generators:", ", ".join(map(str, L.all_generators())))

# %% [markdown]
# In the monomial quotient every monomial of L collapses to a single zero
# element, which inflates |A^h| by one whenever that degree meets L.

# %%
print("|A^h| =", tuple(monomial_quotient_powers(L)))
print("d_h   =", seq)

# %% [markdown]
# Degree 2 explicitly: x1^2 and x1*x2 vanish, everything else survives.

# %%
from sumset_growth.monomial import enumerate_degree

survivors = [u for u in enumerate_degree(5, 2) if u not in L]
print("A^2 = {0} and", ", ".join(map(str, survivors)), f"({len(survivors) + 1} elements)")
