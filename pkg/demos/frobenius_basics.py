"""Tour of the Frobenius algebra layer: quotient algebras, the Gram matrix,
dual bases, neck cutting, comultiplication, and the handle scalar.

Run:  python3 demos/frobenius_basics.py
"""

from foamalg import mv_algebra, truncated_algebra

print("== Truncated polynomial algebra A_3 = Z[X]/(X^3) ==")
A3 = truncated_algebra(3)
print("basis:", ", ".join(A3.basis_labels))
X, X2 = A3.basis_element(1), A3.basis_element(2)
print("X * X^2  =", A3.mul(X, X2), "   (truncation)")
print("dual basis:", [str(y) for y in A3.dual_basis])
print("delta_one =", A3.delta_one)
print("handle    =", A3.handle_scalar())

print()
print("== The rank-3 algebra Z[a,b,c][X]/(X^3 - a X^2 - b X - c) ==")
A = mv_algebra()
X, X2 = A.basis_element(1), A.basis_element(2)
print("X * X^2   =", A.mul(X, X2), "   (reduction against the modulus)")
print("counit(X^2) =", A.counit(X2))
print("counit(X^3) =", A.counit(A.parse_element("X^3")))

print()
print("Gram matrix g[i][j] = counit(e_i e_j):")
for row in A.gram:
    print("   [" + ", ".join(str(x) for x in row) + "]")
print("det =", A.gram_det, " (must be a unit of Z[a,b,c])")
print("dual basis:", [str(y) for y in A.dual_basis])

print()
print("delta_one   =", A.delta_one)
print("comul(X)    =", A.comul(X))
print("comul(X^2)  =", A.comul(X2))
print("handle      =", A.handle_scalar())

print()
print("Neck cutting reconstructs every basis element:")
for u in range(A.rank):
    eu = A.basis_element(u)
    acc = A.zero
    for i in range(A.rank):
        acc = acc + A.dual_basis[i].scale(A.counit(A.mul(A.basis_element(i), eu)))
    print(f"   sum_i y_i counit(e_i * {A.basis_labels[u]}) =", acc)
