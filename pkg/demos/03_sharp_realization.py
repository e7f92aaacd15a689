# %% [markdown]
# Sharp realization by binomial deformation
# =========================================
#
# Replace each minimal generator u of the lexideal by the binomial
# u - u*x_n/x_min(u). If the binomials form a Gröbner basis, the quotient has
# the same Hilbert function and the classes of x_1..x_n generate power sets of
# exactly the prescribed sizes; nothing collapses to zero any more.

# %%
import random

from sumset_growth import (
    binomial_quotient_powers,
    buchberger_check,
    build_lexideal,
    certify,
    deform,
    normal_form,
)
from sumset_growth.macaulay import random_admissible_sequence
from sumset_growth.monomial import Monomial

seq = (1, 5, 13, 25, 42, 63)
L = build_lexideal(seq)
basis = deform(L)
for f in basis:
    print(" ", f)
print(buchberger_check(basis))

# %%
basis = certify(basis)
print("|A^h| =", tuple(binomial_quotient_powers(basis, L)))

# %% [markdown]
# Rewriting x1^2*x2 to its normal form walks down the chain
# x1^2*x2 -> x1*x2*x5 -> x2*x5^2.

# %%
print(normal_form(Monomial.parse("x1^2*x2", 5), basis))

# %% [markdown]
# Random admissible sequences: every one is reproduced exactly.

# %%
rng = random.Random(0)
for _ in range(10):
    s = random_admissible_sequence(rng, 5, max_n=5)
    L = build_lexideal(s)
    got = tuple(binomial_quotient_powers(certify(deform(L)), L))
    print(tuple(s), "ok" if got == tuple(s) else f"MISMATCH {got}")

# %% [markdown]
# The lexideal structure matters. Deforming the generators {x1*x2, x2*x3} in
# three variables, which do not come from a lexideal, gives binomials that are
# not a Gröbner basis.

# %%
from sumset_growth import BinomialBasis, DiffBinomial, buchberger_complete, phi

gens = [Monomial.parse(t, 3) for t in ("x1*x2", "x2*x3")]
pair = BinomialBasis(tuple(DiffBinomial(u, phi(u)) for u in gens), "manual")
print(buchberger_check(pair))
print("completed:", buchberger_complete(pair))
