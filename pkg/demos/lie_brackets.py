"""Lie brackets from branch circles: theta tables whose two-input operation
is antisymmetric and satisfies the Jacobi identity.

Run:  python3 demos/lie_brackets.py
"""

from foamalg import (
    BranchContext,
    check_antisymmetry,
    check_jacobi,
    lie_theta,
    mv_algebra,
    mv_theta,
    truncated_algebra,
)

print("== Brackets on Z[a,b,c][X]/(X^3 - a X^2 - b X - c) ==")
ctx = BranchContext(mv_algebra(), mv_theta())
A = ctx.algebra
one, X, X2 = (A.basis_element(i) for i in range(3))
print("[1, X]    =", ctx.bracket(one, X))
print("[1, X^2]  =", ctx.bracket(one, X2))
print("[X, X^2]  =", ctx.bracket(X, X2))
print()
print("nested brackets:")
print("[1, [X, X^2]]  =", ctx.bracket(one, ctx.bracket(X, X2)))
print("[X, [X^2, 1]]  =", ctx.bracket(X, ctx.bracket(X2, one)))
print("[X^2, [1, X]]  =", ctx.bracket(X2, ctx.bracket(one, X)))

print()
print("== Lie tables on truncated algebras, any odd rank ==")
for n in (3, 5, 7, 9):
    lie_ctx = BranchContext(truncated_algebra(n), lie_theta(n))
    anti = check_antisymmetry(lie_ctx)
    jac = check_jacobi(lie_ctx)
    nonzero = sum(
        1 for i in range(n) for j in range(n) if lie_ctx.bracket_basis(i, j)
    )
    print(f"N={n}: antisymmetry {anti.checked_cases} cases "
          f"{'ok' if anti.passed else 'FAILED'}; "
          f"Jacobi {jac.checked_cases} cases "
          f"{'ok' if jac.passed else 'FAILED'}; "
          f"{nonzero} nonzero basis brackets")

print()
print("closed form for N=5: [X^j, X^k] = theta(5-(j+k), j, k) X^(j+k-1)")
ctx5 = BranchContext(truncated_algebra(5), lie_theta(5))
A5 = ctx5.algebra
for j in range(5):
    for k in range(5):
        value = ctx5.bracket_basis(j, k)
        if value:
            print(f"   [X^{j}, X^{k}] =", value)
