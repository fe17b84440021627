"""
Counting (k, l)-semistandard tableaux
=====================================

Even letters t_i may repeat along a row, odd letters u_j may repeat down a
column. With no odd letters this is ordinary semistandard counting.
"""

# %%
from hookchars import (
    count_ssyt,
    count_super_ssyt,
    enumerate_super_ssyt,
    hook_content_count,
    hook_partitions,
    strict_hook_partitions,
)

# %% Classical counts and the hook-content product
for lam in [(3,), (2, 1), (2, 2), (3, 1, 1)]:
    print(lam, count_ssyt(lam, 3), hook_content_count(lam, 3))

# %% Every tableau of shape (2, 1) over t1, t2, u1
for tab in enumerate_super_ssyt((2, 1), 2, 1):
    print(tab, end="\n\n")

# %% Inside the (1,1)-hook every shape has exactly two tableaux
print([count_super_ssyt(lam, 1, 1) for lam in hook_partitions(1, 1, 7)])

# %% For (2,1): the single row gets 2n+1, every other hook shape 4(lambda_1 - lambda_2 + 1)
n = 7
print(count_super_ssyt((n,), 2, 1), 2 * n + 1)
for lam in strict_hook_partitions(2, 1, n):
    print(list(lam), count_super_ssyt(lam, 2, 1), 4 * (lam[0] - lam[1] + 1))
