"""Group rings R[G] for finite abelian G, with their Frobenius structure.

The Frobenius form picks out the identity element; the dual basis of a group
element is its inverse, so delta_one is sum_g g (x) g^{-1}.  The diagonal
comultiplication g -> g (x) g can be produced by a cyclically symmetric theta
table exactly when every non-identity element has order 2; the derivation
and the resulting bialgebra checks live here.
"""

from __future__ import annotations

from .branchops import BranchContext
from .coeffring import MultiPoly
from .frobalg import AlgebraElement, FrobeniusAlgebra, TensorElement
from .lawsuite import LawReport
from .thetafoam import ThetaTable

_GENERATOR_NAMES = ("x", "y", "z", "w", "v", "u")

_MAX_GROUP_SIZE = 64


class FiniteAbelianGroup:
    """A product of cyclic groups, elements indexed by residue tuples.

    The element with residue tuple (r1, ..., rk) has index
    r1 * o2 * ... * ok + ... + rk (first factor most significant); the
    identity is index 0.
    """

    __slots__ = ("orders", "size", "_strides")

    def __init__(self, orders):
        orders = tuple(int(o) for o in orders)
        if not orders:
            raise ValueError("the group needs at least one cyclic factor")
        if any(o < 2 for o in orders):
            raise ValueError("cyclic orders must be at least 2")
        self.orders = orders
        size = 1
        strides = []
        for o in reversed(orders):
            strides.append(size)
            size *= o
        self.size = size
        self._strides = tuple(reversed(strides))

    def index(self, residues) -> int:
        residues = tuple(residues)
        if len(residues) != len(self.orders):
            raise ValueError("residue tuple length mismatch")
        return sum(
            (r % o) * s for r, o, s in zip(residues, self.orders, self._strides)
        )

    def residues(self, index: int) -> tuple[int, ...]:
        out = []
        for o, s in zip(self.orders, self._strides):
            out.append((index // s) % o)
        return tuple(out)

    def add(self, i: int, j: int) -> int:
        a, b = self.residues(i), self.residues(j)
        return self.index(x + y for x, y in zip(a, b))

    def inverse(self, i: int) -> int:
        return self.index(-r for r in self.residues(i))

    def element_order(self, i: int) -> int:
        order = 1
        for r, o in zip(self.residues(i), self.orders):
            if r:
                g = o // _gcd(r, o)
                order = order * g // _gcd(order, g)
        return order

    def has_exponent_two(self) -> bool:
        """True iff every non-identity element has order 2."""
        return all(o == 2 for o in self.orders)

    def elements(self):
        return range(self.size)

    def __repr__(self):
        return f"FiniteAbelianGroup(orders={list(self.orders)})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _element_label(group: FiniteAbelianGroup, index: int) -> str:
    parts = []
    for name, r in zip(_GENERATOR_NAMES, group.residues(index)):
        if r == 1:
            parts.append(name)
        elif r > 1:
            parts.append(f"{name}^{r}")
    return "*".join(parts) if parts else "1"


class GroupRingAlgebra(FrobeniusAlgebra):
    """A Frobenius algebra whose basis is a finite abelian group."""

    def __init__(self, group: FiniteAbelianGroup, generators=()):
        self.group = group
        gens = tuple(generators)
        n = group.size
        zero, one = MultiPoly.zero(gens), MultiPoly.one(gens)
        labels = [_element_label(group, i) for i in range(n)]

        def unit_vector(k):
            return [one if a == k else zero for a in range(n)]

        mult_rows = [
            [unit_vector(group.add(i, j)) for j in range(n)]
            for i in range(n)
        ]
        counit_vec = [one] + [zero] * (n - 1)
        symbols = {}
        for f in range(len(group.orders)):
            residues = [0] * len(group.orders)
            residues[f] = 1
            symbols[_GENERATOR_NAMES[f]] = unit_vector(group.index(residues))
        super().__init__(gens, labels, mult_rows, counit_vec, symbols=symbols)
        for i in range(n):
            if self.dual_basis[i] != self.basis_element(group.inverse(i)):
                raise AssertionError(
                    f"dual basis of element {labels[i]} is not its inverse"
                )


def group_ring(orders, generators=()) -> GroupRingAlgebra:
    """The group ring of Z/o1 x ... x Z/ok over Z[generators].

    Sizes are bounded at 64 elements; every derived structure stays exact.
    """
    group = FiniteAbelianGroup(orders)
    if group.size > _MAX_GROUP_SIZE:
        raise ValueError(
            f"group size {group.size} exceeds the supported bound "
            f"{_MAX_GROUP_SIZE}"
        )
    if len(group.orders) > len(_GENERATOR_NAMES):
        raise ValueError("too many cyclic factors to name generators")
    return GroupRingAlgebra(group, generators)


def hopf_delta(A: GroupRingAlgebra, u: AlgebraElement) -> TensorElement:
    """The diagonal comultiplication, linearly extending g -> g (x) g."""
    u = A._own(u)
    coeffs = {(i, i): c for i, c in enumerate(u.coeffs) if c}
    return TensorElement(A, 2, coeffs)


def derive_bialgebra_theta(A: GroupRingAlgebra) -> ThetaTable:
    """The theta table forcing the branch co-operation to be the diagonal.

    Matching the diagonal comultiplication forces
    theta(g, h^{-1}, k^{-1}) = 1 exactly when g = h = k; that prescription
    is cyclically symmetric iff every element is its own inverse.  For
    exponent-2 groups the table is theta(g, g, g) = 1 for all g.
    """
    if not isinstance(A, GroupRingAlgebra):
        raise TypeError("derive_bialgebra_theta needs a group ring algebra")
    if not A.group.has_exponent_two():
        raise ValueError(
            "group has an element of order > 2; no cyclically-symmetric "
            "theta reproduces the diagonal comultiplication"
        )
    entries = [((g, g, g), 1) for g in range(A.rank)]
    return ThetaTable.from_entries(A.rank, entries, gens=A.gens)


def check_bialgebra(A: GroupRingAlgebra, ctx: BranchContext) -> LawReport:
    """Verify the branch co-operation gives a bialgebra on the group ring.

    Checks (a) the branch co-operation equals the diagonal on every basis
    element, (b) compatibility cocomul(u v) = cocomul(u) * cocomul(v) on all
    basis pairs (componentwise product in A (x) A), and (c) the counit laws
    for the augmentation counit sending every group element to 1.
    """
    if ctx.algebra is not A:
        raise ValueError("context was not built from the given algebra")
    n = A.rank
    cases = 0

    for g in range(n):
        cases += 1
        eg = A.basis_element(g)
        lhs = ctx.cocomul(eg)
        rhs = hopf_delta(A, eg)
        if lhs != rhs:
            return LawReport(
                law="bialgebra", passed=False, checked_cases=cases,
                counterexample={
                    "inputs": [A.basis_labels[g]],
                    "sublaw": "cocomul equals diagonal",
                    "lhs": A.render_tensor(lhs),
                    "rhs": A.render_tensor(rhs),
                },
            )

    for g in range(n):
        for h in range(n):
            cases += 1
            lhs = ctx.cocomul(A.mul_basis(g, h))
            rhs = ctx.cocomul(A.basis_element(g)) * ctx.cocomul(A.basis_element(h))
            if lhs != rhs:
                return LawReport(
                    law="bialgebra", passed=False, checked_cases=cases,
                    counterexample={
                        "inputs": [A.basis_labels[g], A.basis_labels[h]],
                        "sublaw": "compatibility",
                        "lhs": A.render_tensor(lhs),
                        "rhs": A.render_tensor(rhs),
                    },
                )

    for g in range(n):
        eg = A.basis_element(g)
        t = ctx.cocomul(eg)
        left = A.zero
        right = A.zero
        for (l1, l2), c in t.coeffs.items():
            left = left + A.basis_element(l2).scale(c)
            right = right + A.basis_element(l1).scale(c)
        for side, value in (("left", left), ("right", right)):
            cases += 1
            if value != eg:
                return LawReport(
                    law="bialgebra", passed=False, checked_cases=cases,
                    counterexample={
                        "inputs": [A.basis_labels[g]],
                        "sublaw": f"counit law ({side})",
                        "lhs": A.render_element(value),
                        "rhs": A.render_element(eg),
                    },
                )
    return LawReport(law="bialgebra", passed=True, checked_cases=cases)
