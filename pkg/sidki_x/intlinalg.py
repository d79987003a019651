# License: CeCILL-B (French BSD3-like)

"""
Exact integer linear algebra: Smith normal form, finite abelian groups,
cokernels and tensor products

Matrices are numpy arrays of Python integers (``dtype=object``) so that
entries never overflow.
"""

from functools import reduce
import math

import numpy as np

from .errors import CheckFailure, UsageError


def int_matrix(rows, ncols=None):
    """
    Exact integer matrix from nested sequences

    Parameters
    ----------
    rows: sequence of sequence of int, or ndarray
    ncols: int, optional
        Needed to give shape to a matrix with no rows
    """
    if isinstance(rows, np.ndarray):
        if rows.ndim != 2:
            raise UsageError('integer matrices are two dimensional')
        return np.array([[int(x) for x in row] for row in rows],
                        dtype=object).reshape(rows.shape)
    rows = [[int(x) for x in row] for row in rows]
    if not rows:
        return np.zeros((0, ncols or 0), dtype=object)
    widths = set(len(r) for r in rows)
    if len(widths) != 1:
        raise UsageError('ragged integer matrix')
    res = np.empty((len(rows), widths.pop()), dtype=object)
    for i, row in enumerate(rows):
        for j, val in enumerate(row):
            res[i, j] = val
    return res


def identity(n):
    "exact n×n identity"
    res = np.zeros((n, n), dtype=object)
    for i in range(n):
        res[i, i] = 1
    return res


def _lcm(a, b):
    return a * b // math.gcd(a, b) if a and b else 0


# ---------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------


class SmithNormalForm(object):
    """Smith normal form of an integer matrix

    The input M (m×n) is brought to diagonal form D by unimodular U (m×m)
    and V (n×n) so that

        D = U M V

    with d1 | d2 | ... along the diagonal, all nonnegative. The pivot at
    every step is the entry of least nonzero absolute value in the
    remaining block, ties broken row-major, so the output is a function
    of the input alone. V⁻¹ is tracked alongside V.

    Usage
    -----
    snf = SmithNormalForm(mat)
    snf.run()
    snf.U, snf.D, snf.V
    """

    def __init__(self, mat):
        self._A = int_matrix(mat)
        m, n = self._A.shape
        self._orig = self._A.copy()
        self._U = identity(m)
        self._V = identity(n)
        self._Vinv = identity(n)
        self._t = 0
        self._done = False

    def run(self):
        "do every step; check the result"
        for _ in self:
            pass
        prod = self._U.dot(self._orig).dot(self._V) \
            if self._orig.size else self._A
        if not (prod == self._A).all():
            raise CheckFailure('U·M·V = D')
        return self

    def __iter__(self):
        return self

    def __next__(self):
        "settle one diagonal position"
        if self._done:
            raise StopIteration
        m, n = self._A.shape
        t = self._t
        if t >= min(m, n) or not self._settle(t):
            self._done = True
            raise StopIteration
        self._t += 1
        return t

    next = __next__

    @property
    def U(self):
        "row transform"
        return self._U

    @property
    def D(self):
        "diagonal form"
        return self._A

    @property
    def V(self):
        "column transform"
        return self._V

    @property
    def Vinv(self):
        "inverse of the column transform"
        return self._Vinv

    def diagonal(self):
        "the min(m, n) diagonal entries"
        m, n = self._A.shape
        return [self._A[i, i] for i in range(min(m, n))]

    # ------------------------------------------------------
    # steps
    # ------------------------------------------------------

    def _pivot(self, t):
        block = self._A[t:, t:]
        best = None
        for (i, j), val in np.ndenumerate(block):
            if val != 0 and (best is None or abs(val) < best[0]):
                best = (abs(val), i + t, j + t)
        return best

    def _settle(self, t):
        """
        Bring a divisibility-compatible pivot to (t, t) and clear its
        row and column; False if the remaining block is zero
        """
        A = self._A
        m, n = A.shape
        while True:
            best = self._pivot(t)
            if best is None:
                return False
            _, pi, pj = best
            self._swap_rows(t, pi)
            self._swap_cols(t, pj)
            piv = A[t, t]
            for i in range(t + 1, m):
                if A[i, t] != 0:
                    self._add_row(i, t, -(A[i, t] // piv))
            for j in range(t + 1, n):
                if A[t, j] != 0:
                    self._add_col(j, t, -(A[t, j] // piv))
            if any(A[i, t] != 0 for i in range(t + 1, m)) or \
                    any(A[t, j] != 0 for j in range(t + 1, n)):
                continue
            bad = self._not_divisible(t)
            if bad is None:
                break
            self._add_row(t, bad, 1)
        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            self._U[t, :] = -self._U[t, :]
        return True

    def _not_divisible(self, t):
        A = self._A
        piv = A[t, t]
        m, n = A.shape
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i, j] % piv != 0:
                    return i
        return None

    def _swap_rows(self, i, j):
        if i != j:
            for mat in (self._A, self._U):
                mat[[i, j], :] = mat[[j, i], :]

    def _swap_cols(self, i, j):
        if i != j:
            for mat in (self._A, self._V):
                mat[:, [i, j]] = mat[:, [j, i]]
            self._Vinv[[i, j], :] = self._Vinv[[j, i], :]

    def _add_row(self, dst, src, k):
        "row dst += k row src"
        self._A[dst, :] = self._A[dst, :] + k * self._A[src, :]
        self._U[dst, :] = self._U[dst, :] + k * self._U[src, :]

    def _add_col(self, dst, src, k):
        "col dst += k col src"
        self._A[:, dst] = self._A[:, dst] + k * self._A[:, src]
        self._V[:, dst] = self._V[:, dst] + k * self._V[:, src]
        self._Vinv[src, :] = self._Vinv[src, :] - k * self._Vinv[dst, :]


def smith_normal_form(mat):
    """
    Returns
    -------
    U, D, V: exact integer matrices with U·M·V = D
    """
    snf = SmithNormalForm(mat).run()
    return snf.U, snf.D, snf.V


# ---------------------------------------------------------------------
# finite(ly generated) abelian groups
# ---------------------------------------------------------------------


class FinAbGroup(object):
    """
    Finitely generated abelian group ℤ^r ⊕ ℤ/d1 ⊕ ... ⊕ ℤ/dt in
    invariant-factor form (each di ≥ 2, d1 | d2 | ... | dt)
    """

    def __init__(self, invariant_factors=(), free_rank=0):
        factors = tuple(int(d) for d in invariant_factors)
        if any(d < 2 for d in factors):
            raise UsageError('invariant factors must be at least 2')
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise UsageError('invariant factors must divide each other')
        if free_rank < 0:
            raise UsageError('free rank is nonnegative')
        self.invariant_factors = factors
        self.free_rank = int(free_rank)

    @classmethod
    def from_orders(cls, orders):
        """
        Canonical form of a direct sum of cyclic groups; order 0 means ℤ
        and order 1 is dropped
        """
        orders = [abs(int(o)) for o in orders]
        if not orders:
            return cls()
        diag = np.zeros((len(orders), len(orders)), dtype=object)
        for i, o in enumerate(orders):
            diag[i, i] = o
        return cokernel(diag)

    @property
    def cyclic_orders(self):
        "free part as zeros, then the torsion factors"
        return (0,) * self.free_rank + self.invariant_factors

    def order(self):
        "None when infinite"
        if self.free_rank:
            return None
        return reduce(lambda a, b: a * b, self.invariant_factors, 1)

    def exponent(self):
        "None when infinite; 1 for the trivial group"
        if self.free_rank:
            return None
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_trivial(self):
        "no free part, no torsion"
        return not self.free_rank and not self.invariant_factors

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and \
            self.invariant_factors == other.invariant_factors and \
            self.free_rank == other.free_rank

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.invariant_factors, self.free_rank))

    def __repr__(self):
        return 'FinAbGroup({}, free_rank={})'.format(
            list(self.invariant_factors), self.free_rank)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append('Z')
        elif self.free_rank:
            parts.append('Z^{}'.format(self.free_rank))
        parts.extend('Z/{}'.format(d) for d in self.invariant_factors)
        return ' x '.join(parts) if parts else '0'

    def to_json(self):
        "report form"
        return {'invariant_factors': list(self.invariant_factors),
                'free_rank': self.free_rank}

    def reduce(self, vec):
        """
        Canonical coordinates of a vector on the cyclic generators
        (free coordinates untouched)
        """
        return reduce_vector(self.cyclic_orders, vec)

    def is_zero(self, vec):
        "true if the vector is the neutral element"
        return not any(self.reduce(vec))

    def element_order(self, vec):
        "None for elements of infinite order"
        return element_order(self.cyclic_orders, vec)


def cokernel(mat, ncols=None):
    """
    ℤⁿ modulo the row space of an m×n integer matrix
    """
    mat = int_matrix(mat, ncols=ncols)
    n = mat.shape[1]
    if mat.shape[0] == 0:
        return FinAbGroup(free_rank=n)
    diag = SmithNormalForm(mat).run().diagonal()
    rank = sum(1 for d in diag if d != 0)
    return FinAbGroup([d for d in diag if d > 1], free_rank=n - rank)


def tensor(left, right):
    """
    A ⊗ B, using ℤ/m ⊗ ℤ/n = ℤ/gcd(m, n) and ℤ ⊗ A = A
    """
    return FinAbGroup.from_orders(math.gcd(a, b)
                                  for a in left.cyclic_orders
                                  for b in right.cyclic_orders)


def direct_sum(*groups):
    "A ⊕ B ⊕ ..."
    return FinAbGroup.from_orders(o for g in groups for o in g.cyclic_orders)


# ---------------------------------------------------------------------
# vectors on a direct sum of cyclic groups
#
# `orders` lists the order of each coordinate, 0 standing for ℤ
# ---------------------------------------------------------------------


def reduce_vector(orders, vec):
    "canonical representative of a vector"
    return tuple(int(v) % o if o else int(v) for v, o in zip(vec, orders))


def element_order(orders, vec):
    "None for elements of infinite order"
    res = 1
    for v, o in zip(reduce_vector(orders, vec), orders):
        if v == 0:
            continue
        if o == 0:
            return None
        res = _lcm(res, o // math.gcd(o, v))
    return res


def _relation_rows(orders, vectors):
    rows = [[int(x) for x in v] for v in vectors]
    for i, o in enumerate(orders):
        if o:
            row = [0] * len(orders)
            row[i] = o
            rows.append(row)
    return rows


def quotient_by_span(orders, vectors):
    """
    (⊕ ℤ/orders) / ⟨vectors⟩
    """
    return cokernel(_relation_rows(orders, vectors), ncols=len(orders))


def span_is_zero(orders, vectors):
    "true if every vector is zero"
    return not any(any(reduce_vector(orders, v)) for v in vectors)


def span_order(orders, vectors):
    """
    |⟨vectors⟩| inside a finite direct sum of cyclic groups
    """
    total = FinAbGroup.from_orders(orders).order()
    if total is None:
        raise UsageError('span_order needs a finite ambient group')
    return total // quotient_by_span(orders, vectors).order()


def span_exponent(orders, vectors):
    """
    Exponent of ⟨vectors⟩: the lcm of the generator orders
    (None if some generator has infinite order)
    """
    res = 1
    for vec in vectors:
        o = element_order(orders, vec)
        if o is None:
            return None
        res = _lcm(res, o)
    return res


def span_basis(orders, vectors):
    """
    A generating set of ⟨vectors⟩ with at most len(orders) elements

    The lattice spanned by the vectors and the order relations is
    diagonalised; scaled rows of V⁻¹ then span the same lattice.
    """
    rows = _relation_rows(orders, vectors)
    if not rows:
        return []
    snf = SmithNormalForm(int_matrix(rows, ncols=len(orders))).run()
    basis = []
    for i, d in enumerate(snf.diagonal()):
        if d == 0:
            continue
        vec = reduce_vector(orders, [d * x for x in snf.Vinv[i, :]])
        if any(vec):
            basis.append(vec)
    return basis


def same_lattice(left, right, ncols):
    """
    True if two sets of integer rows span the same sublattice of ℤⁿ
    """
    left = [list(r) for r in left]
    right = [list(r) for r in right]
    both = cokernel(left + right, ncols=ncols)
    return cokernel(left, ncols=ncols) == both and \
        cokernel(right, ncols=ncols) == both


class AbHom(object):
    """
    Homomorphism between finitely generated abelian groups, given by the
    images of the source's cyclic generators (one row per generator, in
    target coordinates)
    """

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = int_matrix(matrix, ncols=len(target.cyclic_orders))
        if self.matrix.shape != (len(source.cyclic_orders),
                                 len(target.cyclic_orders)):
            raise UsageError('homomorphism matrix has the wrong shape')

    def is_well_defined(self):
        "each generator of order d must map to an element killed by d"
        for row, order in zip(self.matrix, self.source.cyclic_orders):
            if order and not self.target.is_zero([order * x for x in row]):
                return False
        return True

    def __call__(self, vec):
        img = [0] * len(self.target.cyclic_orders)
        for coeff, row in zip(vec, self.matrix):
            if coeff:
                img = [x + coeff * y for x, y in zip(img, row)]
        return self.target.reduce(img)

    def image_order(self):
        "order of the image (target must be finite)"
        return span_order(self.target.cyclic_orders,
                          [list(r) for r in self.matrix])
