"""
Character tables of S_n
=======================

Murnaghan-Nakayama values, class sizes and the orthogonality relations.
"""

# %%
from math import factorial

import numpy as np

from hookchars import character, character_table, class_size, dimension

# %% The table of S_4, rows lambda and columns mu in reverse-lexicographic order
table = character_table(4)
print(table.to_plain())

# %% Dimensions are the identity column, and agree with the hook-length formula
for lam in table.lambdas:
    print(list(lam), table[lam, (1, 1, 1, 1)], dimension(lam))

# %% Row orthogonality as a matrix identity: X diag(|C_mu|) X^T = n! I
n = 6
t = character_table(n)
X = np.array(t.values, dtype=object)
sizes = np.diag([class_size(mu).size for mu in t.mus]).astype(object)
gram = X @ sizes @ X.T
print((gram == factorial(n) * np.eye(len(t.lambdas), dtype=object)).all())

# %% A single value deep in S_12
print(character((5, 4, 2, 1), (3, 3, 3, 1, 1, 1)))
