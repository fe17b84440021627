"""
Traces on the graded tensor space
=================================

S_n permutes tensor positions of (V0 + V1)^{(x)n}; odd vectors passing each
other pick up a minus sign. The trace of a permutation is computed by brute
force over all (k+l)^n basis words and compared with the per-cycle product.
"""

# %%
from hookchars import apply_permutation, partitions_of, rhs_product, trace_super

# %% Swapping two odd letters gives a sign, swapping an even letter does not
k, l = 1, 1  # letter 0 = t1, letter 1 = u1
print(apply_permutation((1, 0), (1, 1), k, l))
print(apply_permutation((1, 0), (0, 1), k, l))

# %% Trace versus the product of (k + (-1)^(m+1) l) over cycle lengths m
k, l = 2, 1
for mu in partitions_of(6):
    print(list(mu), trace_super(mu, k, l), rhs_product(mu, k, l))
