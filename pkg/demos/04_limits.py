"""
Limits of polynomial matrix families, computed exactly over the rationals.
"""
from pmmonoid.pm_linalg import PolyMatrix, Subspace, family_limit, kernel, restriction_limit

# %% diag(1, t, t^2, t^3): each term acts on the kernel of the previous one
lim = family_limit(PolyMatrix.diagonal_powers([0, 1, 2, 3]))
for i, term in enumerate(lim.terms):
    print(f"term {i}, on a subspace of dimension {term.domain.dim}:\n{term.matrix}\n")

# %% A two-term family and its restriction limits
B0 = PolyMatrix.from_coeffs([[[1], [], [], []], [[], [0, 1], [], []], [[]] * 4, [[]] * 4])
B1 = PolyMatrix.from_coeffs([[[], []], [[], []], [[1], []], [[], [0, 1]]])
dom = kernel(B0.at(1))
print(restriction_limit(B0, Subspace.span(4, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])), "\n")
print(restriction_limit(B1, Subspace.span(4, [[0, 0, 0, 1]]), dom))
