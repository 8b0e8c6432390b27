"""Finite-rank commutative Frobenius algebras over Z[g1, ..., gk].

An algebra is presented by a multiplication table on a chosen basis together
with the counit (Frobenius form) on basis elements.  Construction eagerly
derives the Gram matrix, its inverse, the dual basis and the neck-cutting
tensor delta_one, and validates the algebra axioms on all basis tuples.

The Gram matrix must have determinant 1 or -1: its inverse then stays inside
the integer coefficient ring, which is the only setting in which the dual
basis (and hence delta_one) exists over Z[g...] without passing to fractions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from .coeffring import MultiPoly, parse_expression


class DegenerateFormError(ValueError):
    """The Gram matrix of the Frobenius form is singular or non-unimodular."""


class AlgebraElement:
    """An element of a Frobenius algebra: a coefficient vector over the basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "FrobeniusAlgebra", coeffs):
        coeffs = tuple(
            c if isinstance(c, MultiPoly) else MultiPoly.const(algebra.gens, c)
            for c in coeffs
        )
        if len(coeffs) != algebra.rank:
            raise ValueError(
                f"rank mismatch: got {len(coeffs)} coefficients for a rank "
                f"{algebra.rank} algebra"
            )
        for c in coeffs:
            if c.gens != algebra.gens:
                raise ValueError(
                    f"generator mismatch: {c.gens} vs {algebra.gens}"
                )
        self.algebra = algebra
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if other.algebra.rank != self.algebra.rank:
            raise ValueError("rank mismatch between algebra elements")
        return other

    def __add__(self, other):
        other = self._check(other)
        return AlgebraElement(
            self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        other = self._check(other)
        return AlgebraElement(
            self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.mul(self, other)
        if isinstance(other, (int, MultiPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = MultiPoly.const(self.algebra.gens, c)
        return AlgebraElement(self.algebra, tuple(c * x for x in self.coeffs))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.algebra.unit
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.algebra.rank == other.algebra.rank
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.algebra.render_element(self)


class TensorElement:
    """An element of the k-fold tensor power of the algebra.

    Stored sparsely: a map from k-tuples of basis indices to nonzero
    polynomial coefficients.
    """

    __slots__ = ("algebra", "order", "coeffs")

    def __init__(self, algebra: "FrobeniusAlgebra", order: int, coeffs):
        if order < 1:
            raise ValueError("tensor order must be at least 1")
        n = algebra.rank
        canon: dict[tuple[int, ...], MultiPoly] = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for idx, c in items:
            idx = tuple(int(i) for i in idx)
            if len(idx) != order:
                raise ValueError(f"index tuple {idx} does not have order {order}")
            if any(i < 0 or i >= n for i in idx):
                raise ValueError(f"basis index out of range in {idx}")
            if isinstance(c, int):
                c = MultiPoly.const(algebra.gens, c)
            s = canon.get(idx)
            s = c if s is None else s + c
            if s:
                canon[idx] = s
            elif idx in canon:
                del canon[idx]
        self.algebra = algebra
        self.order = order
        self.coeffs = canon

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected TensorElement, got {type(other).__name__}")
        if other.order != self.order or other.algebra.rank != self.algebra.rank:
            raise ValueError("tensor order or rank mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        merged = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = merged.get(idx)
            s = c if s is None else s + c
            if s:
                merged[idx] = s
            elif idx in merged:
                del merged[idx]
        return TensorElement(self.algebra, self.order, merged)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __neg__(self):
        return TensorElement(
            self.algebra, self.order, {i: -c for i, c in self.coeffs.items()}
        )

    def scale(self, c) -> "TensorElement":
        if isinstance(c, int):
            c = MultiPoly.const(self.algebra.gens, c)
        return TensorElement(
            self.algebra, self.order, {i: c * v for i, v in self.coeffs.items()}
        )

    def __rmul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        """Componentwise algebra product on same-order tensors."""
        if isinstance(other, (int, MultiPoly)):
            return self.scale(other)
        other = self._check(other)
        A = self.algebra
        out: dict[tuple[int, ...], MultiPoly] = {}
        for s, cs in self.coeffs.items():
            for t, ct in other.coeffs.items():
                base = cs * ct
                legs = [A.mul_basis(a, b) for a, b in zip(s, t)]
                choices = [
                    [(i, c) for i, c in enumerate(leg.coeffs) if c]
                    for leg in legs
                ]
                for combo in itertools.product(*choices):
                    idx = tuple(i for i, _ in combo)
                    c = base
                    for _, factor in combo:
                        c = c * factor
                    prev = out.get(idx)
                    c = c if prev is None else prev + c
                    if c:
                        out[idx] = c
                    elif idx in out:
                        del out[idx]
        return TensorElement(A, self.order, out)

    def swap(self) -> "TensorElement":
        """Exchange the two legs of an order-2 tensor."""
        if self.order != 2:
            raise ValueError("swap is defined for order-2 tensors")
        return TensorElement(
            self.algebra, 2, {(j, i): c for (i, j), c in self.coeffs.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.algebra.rank == other.algebra.rank
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return self.algebra.render_tensor(self)


# -- exact linear algebra over the coefficient ring --------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _poly_determinant(mat, gens) -> MultiPoly:
    """Determinant by dynamic programming over column subsets.

    Stays entirely inside Z[g...]; no division is performed.  Cost is
    O(n * 2^n) ring multiplications, fine for the small ranks where Gram
    matrices have non-constant entries.
    """
    n = len(mat)
    zero = MultiPoly.zero(gens)
    if n == 0:
        return MultiPoly.one(gens)
    prev = {0: MultiPoly.one(gens)}
    for r in range(n):
        cur: dict[int, MultiPoly] = {}
        for mask, val in prev.items():
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = mat[r][c]
                if not entry:
                    continue
                term = val * entry
                if _popcount(mask >> (c + 1)) % 2:
                    term = -term
                s = cur.get(mask | bit)
                s = term if s is None else s + term
                cur[mask | bit] = s
        prev = {m: v for m, v in cur.items() if v}
    return prev.get((1 << n) - 1, zero)


def _poly_adjugate_inverse(mat, gens):
    """(det, inverse) of a matrix over Z[g...] with unit determinant.

    The inverse is obtained from the adjugate: adj[j][i] is the signed minor
    at (i, j), and for det = ±1 the inverse is det * adjugate.
    """
    n = len(mat)
    det = _poly_determinant(mat, gens)
    if not det.is_unit():
        raise DegenerateFormError(
            f"degenerate or non-unimodular Frobenius form: det(gram) = {det}"
        )
    sign = det.constant_value()
    inv = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [mat[r][c] for c in range(n) if c != j]
                for r in range(n) if r != i
            ]
            minor = _poly_determinant(sub, gens)
            if (i + j) % 2:
                minor = -minor
            entry = minor if sign == 1 else -minor
            inv[j][i] = entry
    return det, inv


def _const_inverse(mat, gens):
    """(det, inverse) for a matrix of constant entries, via exact fractions."""
    n = len(mat)
    a = [[Fraction(mat[i][j].constant_value()) for j in range(n)] for i in range(n)]
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise DegenerateFormError(
                "degenerate or non-unimodular Frobenius form: det(gram) = 0"
            )
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        det *= aug[col][col]
        inv_pivot = 1 / aug[col][col]
        aug[col] = [x * inv_pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    if det not in (1, -1):
        raise DegenerateFormError(
            f"degenerate or non-unimodular Frobenius form: det(gram) = {det}"
        )
    inv = [
        [MultiPoly.const(gens, int(aug[i][n + j])) for j in range(n)]
        for i in range(n)
    ]
    return MultiPoly.const(gens, int(det)), inv


def unimodular_inverse(mat, gens):
    """Invert a symmetric matrix over Z[g...], requiring determinant ±1.

    Raises DegenerateFormError when the determinant is not a unit: the dual
    basis then cannot be expressed in the given basis over the integer ring.
    """
    n = len(mat)
    if all(mat[i][j].is_constant() for i in range(n) for j in range(n)):
        return _const_inverse(mat, gens)
    if n > 14:
        raise DegenerateFormError(
            "polynomial Gram matrices above rank 14 are not supported"
        )
    return _poly_adjugate_inverse(mat, gens)


# -- the algebra itself -------------------------------------------------------


class FrobeniusAlgebra:
    """A commutative Frobenius algebra presented by a multiplication table.

    Immutable after construction; all derived data (Gram matrix, dual basis,
    delta_one) is computed eagerly, so instances are safe to share.
    """

    def __init__(self, gens, basis_labels, mult_rows, counit_vec,
                 symbols=None, validate: bool = True):
        self.gens = tuple(gens)
        self.basis_labels = tuple(basis_labels)
        self.rank = len(self.basis_labels)
        n = self.rank
        if n < 1:
            raise ValueError("algebra rank must be at least 1")

        counit_vec = tuple(
            c if isinstance(c, MultiPoly) else MultiPoly.const(self.gens, c)
            for c in counit_vec
        )
        if len(counit_vec) != n:
            raise ValueError(f"counit vector must have length {n}")
        for c in counit_vec:
            if c.gens != self.gens:
                raise ValueError(
                    f"generator mismatch in counit: {c.gens} vs {self.gens}"
                )
        self.counit_vec = counit_vec

        table = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(AlgebraElement(self, mult_rows[i][j]))
            table.append(tuple(row))
        self.mult_table = tuple(table)

        self._symbols = {
            name: AlgebraElement(self, coeffs)
            for name, coeffs in (symbols or {}).items()
        }
        for name in self._symbols:
            if name in self.gens:
                raise ValueError(
                    f"basis symbol {name!r} collides with a ring generator"
                )

        if validate:
            self._validate_algebra()

        self.gram = tuple(
            tuple(self.counit(self.mult_table[i][j]) for j in range(n))
            for i in range(n)
        )
        self.gram_det, dual_coords = unimodular_inverse(
            [list(row) for row in self.gram], self.gens
        )
        # dual_coords = gram^{-1}; column j holds the coordinates of y_j,
        # so that counit(e_i * y_j) = delta_{ij}.
        self.dual_basis = tuple(
            AlgebraElement(self, tuple(dual_coords[k][j] for k in range(n)))
            for j in range(n)
        )
        delta = {}
        for i in range(n):
            for a, c in enumerate(self.dual_basis[i].coeffs):
                if c:
                    key = (a, i)
                    prev = delta.get(key)
                    delta[key] = c if prev is None else prev + c
        self.delta_one = TensorElement(self, 2, delta)

        if validate:
            self._validate_frobenius()

    # -- basic accessors -----------------------------------------------------

    @property
    def unit(self) -> AlgebraElement:
        return self.basis_element(0)

    @property
    def zero(self) -> AlgebraElement:
        z = MultiPoly.zero(self.gens)
        return AlgebraElement(self, (z,) * self.rank)

    def basis_element(self, i: int) -> AlgebraElement:
        coeffs = [MultiPoly.zero(self.gens)] * self.rank
        coeffs[i] = MultiPoly.one(self.gens)
        return AlgebraElement(self, coeffs)

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def scalar(self, value: int) -> MultiPoly:
        return MultiPoly.const(self.gens, value)

    def mul_basis(self, i: int, j: int) -> AlgebraElement:
        return self.mult_table[i][j]

    # -- structure maps --------------------------------------------------------

    def mul(self, u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of the multiplication table."""
        u, v = self._own(u), self._own(v)
        acc = [MultiPoly.zero(self.gens)] * self.rank
        for i, cu in enumerate(u.coeffs):
            if not cu:
                continue
            for j, cv in enumerate(v.coeffs):
                if not cv:
                    continue
                c = cu * cv
                for k, ct in enumerate(self.mult_table[i][j].coeffs):
                    if ct:
                        acc[k] = acc[k] + c * ct
        return AlgebraElement(self, acc)

    def counit(self, u: AlgebraElement) -> MultiPoly:
        """Linear extension of the Frobenius form to arbitrary elements."""
        u = self._own(u)
        acc = MultiPoly.zero(self.gens)
        for c, e in zip(u.coeffs, self.counit_vec):
            if c and e:
                acc = acc + c * e
        return acc

    def comul(self, u: AlgebraElement) -> TensorElement:
        """Comultiplication through the second leg: sum_i y_i (x) (e_i * u)."""
        u = self._own(u)
        out: dict[tuple[int, int], MultiPoly] = {}
        for i in range(self.rank):
            w = self.mul(self.basis_element(i), u)
            for a, ca in enumerate(self.dual_basis[i].coeffs):
                if not ca:
                    continue
                for b, cb in enumerate(w.coeffs):
                    if not cb:
                        continue
                    key = (a, b)
                    c = ca * cb
                    prev = out.get(key)
                    c = c if prev is None else prev + c
                    if c:
                        out[key] = c
                    elif key in out:
                        del out[key]
        return TensorElement(self, 2, out)

    def handle_scalar(self) -> MultiPoly:
        """counit(mul(delta_one)): the scalar of the one-handled sphere."""
        acc = MultiPoly.zero(self.gens)
        for i in range(self.rank):
            acc = acc + self.counit(self.mul(self.dual_basis[i], self.basis_element(i)))
        return acc

    def tensor(self, *elems: AlgebraElement) -> TensorElement:
        """The elementary tensor u1 (x) ... (x) uk, expanded over the basis."""
        if not elems:
            raise ValueError("tensor needs at least one factor")
        out: dict[tuple[int, ...], MultiPoly] = {}
        choices = [
            [(i, c) for i, c in enumerate(self._own(u).coeffs) if c]
            for u in elems
        ]
        for combo in itertools.product(*choices):
            idx = tuple(i for i, _ in combo)
            c = MultiPoly.one(self.gens)
            for _, factor in combo:
                c = c * factor
            prev = out.get(idx)
            out[idx] = c if prev is None else prev + c
        return TensorElement(self, len(elems), out)

    def tensor_zero(self, order: int) -> TensorElement:
        return TensorElement(self, order, {})

    def _own(self, u: AlgebraElement) -> AlgebraElement:
        if not isinstance(u, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(u).__name__}")
        if u.algebra.rank != self.rank:
            raise ValueError(
                f"rank mismatch: element of rank {u.algebra.rank} used with "
                f"rank {self.rank} algebra"
            )
        return u

    # -- parsing and rendering --------------------------------------------------

    def parse_element(self, src: str) -> AlgebraElement:
        """Parse an element expression such as `X^2`, `a*X + b` or `x*y`.

        Names resolve to ring generators (as scalars) or to the algebra's
        basis symbols; products reduce inside the algebra.
        """
        def name_value(name):
            if name in self._symbols:
                return self._symbols[name]
            if name in self.gens:
                return self.unit.scale(MultiPoly.gen(self.gens, name))
            known = sorted(self._symbols) + list(self.gens)
            raise ValueError(
                f"unknown symbol {name!r} (algebra knows {', '.join(known) or 'none'})"
            )

        return parse_expression(
            src,
            constant=lambda k: self.unit.scale(k),
            name_value=name_value,
        )

    def _coeff_label_str(self, c: MultiPoly, label: str) -> str:
        body = str(c)
        if label == "1":
            return body if len(c.terms) <= 1 else f"({body})"
        if body == "1":
            return label
        if body == "-1":
            return f"-{label}"
        if len(c.terms) > 1:
            return f"({body})*{label}"
        return f"{body}*{label}"

    def render_element(self, u: AlgebraElement) -> str:
        parts = [
            self._coeff_label_str(c, self.basis_labels[i])
            for i, c in sorted(enumerate(u.coeffs), reverse=True)
            if c
        ]
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def render_tensor(self, t: TensorElement) -> str:
        parts = []
        for idx in sorted(t.coeffs):
            label = "⊗".join(self.basis_labels[i] for i in idx)
            parts.append(self._coeff_label_str(t.coeffs[idx], label))
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        gens = ",".join(self.gens) or "∅"
        return f"FrobeniusAlgebra(rank={self.rank}, gens=[{gens}])"

    # -- construction-time validation ---------------------------------------------

    def _elementary_index_table(self):
        """If every basis product is a single basis element with coefficient 1,
        return the integer index table, else None."""
        one = MultiPoly.one(self.gens)
        table = []
        for row in self.mult_table:
            irow = []
            for entry in row:
                nonzero = [(k, c) for k, c in enumerate(entry.coeffs) if c]
                if len(nonzero) != 1 or nonzero[0][1] != one:
                    return None
                irow.append(nonzero[0][0])
            table.append(irow)
        return table

    def _validate_algebra(self):
        n = self.rank
        for j in range(n):
            if self.mult_table[0][j] != self.basis_element(j):
                raise ValueError(
                    f"basis element 0 is not a unit: e0*e{j} != e{j}"
                )
        for i in range(n):
            for j in range(i + 1, n):
                if self.mult_table[i][j] != self.mult_table[j][i]:
                    raise ValueError(
                        f"multiplication table is not commutative at ({i}, {j})"
                    )
        index_table = self._elementary_index_table()
        if index_table is not None:
            for i in range(n):
                for j in range(n):
                    ij = index_table[i][j]
                    for k in range(n):
                        if index_table[ij][k] != index_table[i][index_table[j][k]]:
                            raise ValueError(
                                f"multiplication is not associative at ({i}, {j}, {k})"
                            )
            return
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.mul(self.mult_table[i][j], self.basis_element(k))
                    right = self.mul(self.basis_element(i), self.mult_table[j][k])
                    if left != right:
                        raise ValueError(
                            f"multiplication is not associative at ({i}, {j}, {k})"
                        )
                    if self.counit(left) != self.counit(right):
                        raise ValueError(
                            f"Frobenius form is not associative at ({i}, {j}, {k})"
                        )

    def _validate_frobenius(self):
        n = self.rank
        for i in range(n):
            for j in range(n):
                value = self.counit(self.mul(self.basis_element(i), self.dual_basis[j]))
                expected = self.scalar(1 if i == j else 0)
                if value != expected:
                    raise DegenerateFormError(
                        f"dual basis check failed at ({i}, {j}): "
                        f"counit(e_{i} * y_{j}) = {value}"
                    )
        for u in range(n):
            acc = self.zero
            for i in range(n):
                w = self.counit(self.mul(self.basis_element(i), self.basis_element(u)))
                acc = acc + self.dual_basis[i].scale(w)
            if acc != self.basis_element(u):
                raise DegenerateFormError(
                    f"neck-cutting resolution failed on basis element {u}"
                )


# -- constructors from quotient polynomial rings -------------------------------


def algebra_from_modulus(generators, modulus, counit,
                         symbol: str = "X") -> FrobeniusAlgebra:
    """Quotient algebra R[X]/(m(X)) with basis 1, X, ..., X^(n-1).

    `modulus` lists the coefficients of the monic modulus, lowest degree
    first (length n+1 with final coefficient 1); `counit` gives the Frobenius
    form on the monomial basis.  Products reduce X^n against the modulus.
    """
    gens = tuple(generators)

    def as_poly(c):
        return c if isinstance(c, MultiPoly) else MultiPoly.const(gens, c)

    coeffs = [as_poly(c) for c in modulus]
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("modulus must have degree at least 1")
    if coeffs[-1] != MultiPoly.one(gens):
        raise ValueError("modulus must be monic (leading coefficient exactly 1)")

    counit_vec = [as_poly(c) for c in counit]
    if len(counit_vec) != n:
        raise ValueError(f"counit must have length {n}")

    zero, one = MultiPoly.zero(gens), MultiPoly.one(gens)
    powers = []
    for k in range(n):
        powers.append([one if i == k else zero for i in range(n)])
    for k in range(n, 2 * n - 1):
        prev = powers[k - 1]
        overflow = prev[-1]
        shifted = [zero] + prev[:-1]
        powers.append([shifted[i] - overflow * coeffs[i] for i in range(n)])

    mult_rows = [[powers[i + j] for j in range(n)] for i in range(n)]
    labels = ["1"] + [symbol if k == 1 else f"{symbol}^{k}" for k in range(1, n)]
    if n >= 2:
        symbols = {symbol: powers[1]}
    else:
        symbols = {symbol: [-coeffs[0]]}
    return FrobeniusAlgebra(gens, labels, mult_rows, counit_vec, symbols=symbols)


def truncated_algebra(n: int, generators=()) -> FrobeniusAlgebra:
    """R[X]/(X^n) with the form picking out the coefficient of X^(n-1)."""
    if n < 2:
        raise ValueError("truncated algebra needs degree at least 2")
    gens = tuple(generators)
    modulus = [0] * n + [1]
    counit = [0] * (n - 1) + [1]
    return algebra_from_modulus(gens, modulus, counit)


def mv_algebra() -> FrobeniusAlgebra:
    """Z[a,b,c][X]/(X^3 - a*X^2 - b*X - c) with counit (0, 0, -1)."""
    gens = ("a", "b", "c")
    a = MultiPoly.gen(gens, "a")
    b = MultiPoly.gen(gens, "b")
    c = MultiPoly.gen(gens, "c")
    modulus = [-c, -b, -a, MultiPoly.one(gens)]
    counit = [0, 0, -1]
    return algebra_from_modulus(gens, modulus, counit)
