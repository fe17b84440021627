"""
Hook character identities
=========================

Weighted sums of characters over the (k, l)-hook reproduce the trace
product exactly; two special cases follow by exact division.
"""

# %%
from hookchars import verify_21_corollary, verify_hook_sum, verify_main_identity

# %% Main identity for n = 6, k = 2, l = 1, with brute-force traces attached
rep = verify_main_identity(6, 2, 1)
for row in rep.rows:
    print(list(row.mu), row.lhs, row.rhs, row.oracle)
print("all pass:", rep.all_pass)

# %% Sum of the hook characters chi^(n-i, 1^i)
rep = verify_hook_sum(9)
print(rep.to_plain())
for row in rep.rows:
    if row.lhs:
        print(list(row.mu), row.lhs)

# %% The (2,1) corollary as a LaTeX table
print(verify_21_corollary(4).to_latex())
