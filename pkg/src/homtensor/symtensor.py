"""Symmetric tensors in monomial coordinates, matching tensors and their
Waring decompositions.

A symmetric tensor of order ``n`` over ``F^m`` is stored by its values on
exponent vectors ``(i_1, ..., i_m)`` with ``sum == n``: the full-array entry at
an index tuple equals the value at that tuple's exponent vector.  Values are
array entries, not divided powers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .field import QQ, PrimeField
from .linalg import matrix_rank, solve_linear, solve_vandermonde

__all__ = [
    "SymTensor",
    "WaringDecomposition",
    "monomials",
    "exponent_of",
    "make_M",
    "power",
    "eval_power_sum",
    "decompose_M",
    "sym_rank_bruteforce_dim2",
    "power_independence_check",
    "pairwise_independent",
]


def monomials(dim: int, order: int):
    """Exponent vectors of length ``dim`` summing to ``order``, in descending
    lexicographic order (so ``(n, 0), (n-1, 1), ...`` for ``dim == 2``)."""
    if dim == 0:
        return [()] if order == 0 else []
    if dim == 1:
        return [(order,)]
    out = []
    for first in range(order, -1, -1):
        for rest in monomials(dim - 1, order - first):
            out.append((first,) + rest)
    return out


def exponent_of(index, dim: int) -> tuple:
    e = [0] * dim
    for i in index:
        e[i] += 1
    return tuple(e)


class SymTensor:
    """Symmetric tensor of a given ``dim`` and ``order`` over ``field``.

    Missing coordinates read as zero, so lookup is total.
    """

    __slots__ = ("dim", "order", "field", "_coords")

    def __init__(self, dim: int, order: int, coords=None, field=QQ):
        self.dim = dim
        self.order = order
        self.field = field
        self._coords = {}
        for e, x in (coords or {}).items():
            e = tuple(e)
            if len(e) != dim or sum(e) != order or min(e, default=0) < 0:
                raise ValueError(f"{e} is not an exponent vector for dim {dim}, order {order}")
            x = field(x)
            if x != 0:
                self._coords[e] = x

    @classmethod
    def from_function(cls, dim, order, fn, field=QQ) -> SymTensor:
        """Build from ``fn(exponent_vector)``."""
        return cls(dim, order, {e: fn(e) for e in monomials(dim, order)}, field)

    @classmethod
    def from_hamming(cls, values, field=QQ) -> SymTensor:
        """Boolean-domain signature ``[f_0, ..., f_n]`` indexed by Hamming weight."""
        n = len(values) - 1
        return cls(2, n, {(n - w, w): v for w, v in enumerate(values)}, field)

    @classmethod
    def scalar(cls, x, dim=1, field=QQ) -> SymTensor:
        return cls(dim, 0, {(0,) * dim: x}, field)

    def __getitem__(self, e):
        return self._coords.get(tuple(e), self.field.zero)

    def entry(self, index):
        """Full-array entry at an index tuple of length ``order``."""
        if len(index) != self.order:
            raise ValueError(f"index of length {len(index)} for order {self.order}")
        return self[exponent_of(index, self.dim)]

    def coords(self) -> dict:
        """All ``C(dim + order - 1, order)`` coordinates, zeros included."""
        return {e: self[e] for e in monomials(self.dim, self.order)}

    def nonzero(self) -> dict:
        return dict(self._coords)

    def hamming_vector(self) -> list:
        if self.dim != 2:
            raise ValueError("Hamming-weight form needs dim 2")
        n = self.order
        return [self[(n - w, w)] for w in range(n + 1)]

    def to_array(self):
        """Nested-list full array (``dim ** order`` entries)."""

        def build(prefix):
            if len(prefix) == self.order:
                return self.entry(prefix)
            return [build(prefix + (i,)) for i in range(self.dim)]

        return build(())

    def _check_compatible(self, other):
        if not isinstance(other, SymTensor):
            return False
        if (self.dim, self.order) != (other.dim, other.order):
            raise ValueError("tensors differ in dim or order")
        if self.field != other.field:
            raise TypeError(f"mixed fields {self.field} and {other.field}")
        return True

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        if (self.dim, self.order, self.field) != (other.dim, other.order, other.field):
            return False
        return self._coords == other._coords

    def __add__(self, other):
        if not self._check_compatible(other):
            return NotImplemented
        out = dict(self._coords)
        for e, x in other._coords.items():
            out[e] = out.get(e, self.field.zero) + x
        return SymTensor(self.dim, self.order, out, self.field)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> SymTensor:
        c = self.field(c)
        return SymTensor(self.dim, self.order, {e: c * x for e, x in self._coords.items()}, self.field)

    def transform(self, M) -> SymTensor:
        """Apply the ``m_out x dim`` matrix ``M`` along every mode:
        ``out[j_1..j_n] = sum_i prod_t M[j_t][i_t] * self[i_1..i_n]``."""
        m_out = len(M)
        M = [[self.field(x) for x in row] for row in M]
        src = [(idx, self.entry(idx)) for idx in itertools.product(range(self.dim), repeat=self.order)]
        src = [(idx, x) for idx, x in src if x != 0]

        def value(e):
            j = [c for c, k in enumerate(e) for _ in range(k)]
            total = self.field.zero
            for idx, x in src:
                for jt, it in zip(j, idx):
                    x = x * M[jt][it]
                    if x == 0:
                        break
                total = total + x
            return total

        return SymTensor.from_function(m_out, self.order, value, self.field)

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "dim": self.dim,
            "order": self.order,
            "coords": {"(" + ",".join(map(str, e)) + ")": fmt(x) for e, x in self.coords().items()},
        }

    @classmethod
    def from_json(cls, obj, field=QQ) -> SymTensor:
        coords = {}
        for key, val in obj["coords"].items():
            e = tuple(int(t) for t in key.strip("()").split(",") if t.strip())
            coords[e] = field.parse(str(val))
        return cls(int(obj["dim"]), int(obj["order"]), coords, field)

    def __repr__(self):
        body = ", ".join(f"{e}: {x}" for e, x in sorted(self._coords.items(), reverse=True))
        return f"SymTensor(dim={self.dim}, order={self.order}, {{{body}}})"


def make_M(n: int, a, b, field=QQ) -> SymTensor:
    """Matching tensor ``[a, b, 0, ..., 0]``; order 0 gives the scalar ``a``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return SymTensor(2, 0, {(0, 0): a}, field)
    return SymTensor(2, n, {(n, 0): a, (n - 1, 1): b}, field)


def power(v, n: int, field=QQ) -> SymTensor:
    """``v^{⊗n}``: coordinate ``e`` maps to ``prod_j v_j ** e_j``."""
    v = [field(x) for x in v]

    def value(e):
        out = field.one
        for x, k in zip(v, e):
            if k:
                out = out * x**k
        return out

    return SymTensor.from_function(len(v), n, value, field)


@dataclass(frozen=True)
class WaringDecomposition:
    """``sum_i lam_i v_i^{⊗order}``; ``terms`` is a tuple of ``(lam, v)``."""

    terms: tuple
    order: int
    dim: int = 2
    field: object = QQ

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "order": self.order,
            "terms": [{"lambda": fmt(lam), "v": [fmt(x) for x in v]} for lam, v in self.terms],
        }


def eval_power_sum(dec: WaringDecomposition) -> SymTensor:
    out = SymTensor(dec.dim, dec.order, field=dec.field)
    for lam, v in dec.terms:
        if len(v) != dec.dim:
            raise ValueError(f"vector {v} does not have dim {dec.dim}")
        out = out + power(v, dec.order, dec.field).scale(lam)
    return out


def _distinct_nodes_with_sum(n: int, target):
    """``0, 1, ..., n-2`` then the value completing the sum to ``target``;
    on a collision every earlier node is shifted up by one, after which the
    last node is negative and cannot collide."""
    for offset in (0, 1):
        nodes = [QQ(i + offset) for i in range(n - 1)]
        nodes.append(target - sum(nodes, QQ.zero))
        if len(set(nodes)) == n:
            return nodes
    raise AssertionError(f"no distinct nodes found for n={n}, target={target}")


def decompose_M(n: int, a, b, field=QQ) -> WaringDecomposition:
    """Length-``n`` decomposition of ``M_{n;a,b}`` over QQ.

    Uses ``v_i = (alpha_i, 1)`` with distinct ``alpha_i`` summing to ``a/b``;
    the weights come from the Vandermonde system whose row ``j`` reads
    ``sum_i lam_i alpha_i**j = coefficient at Hamming weight n - j``.
    """
    if field != QQ:
        raise ValueError("decompose_M works over QQ only")
    a, b = QQ(a), QQ(b)
    if b == 0:
        raise ValueError("b must be nonzero")
    if n < 1:
        raise ValueError("n must be at least 1")
    nodes = _distinct_nodes_with_sum(n, a / b)
    rhs = [QQ.zero] * (n + 1)
    rhs[n] = a
    rhs[n - 1] = b
    lam = solve_vandermonde(nodes, rhs, n, QQ)
    if lam is None:
        raise AssertionError(f"inconsistent Vandermonde system for nodes {nodes}")
    dec = WaringDecomposition(tuple((l, (x, QQ.one)) for l, x in zip(lam, nodes)), n, 2, QQ)
    if eval_power_sum(dec) != make_M(n, a, b):
        raise AssertionError("decomposition does not reproduce M")
    return dec


def _projective_points(field: PrimeField):
    return [(field.one, t) for t in field.elements()] + [(field.zero, field.one)]


def sym_rank_bruteforce_dim2(T: SymTensor, cap: int | None = None):
    """Exhaustive symmetric rank over GF(p) for a ``dim == 2`` tensor.

    Tries every ``r``-subset of the ``p + 1`` projective points for
    ``r = 0, 1, ...`` and solves for the weights.  Returns ``None`` if no
    decomposition with at most ``cap`` terms exists (default cap ``p + 1``).
    """
    field = T.field
    if not isinstance(field, PrimeField):
        raise ValueError("the rank oracle needs a prime field")
    if T.dim != 2:
        raise ValueError("the rank oracle handles dim 2 only")
    n = T.order
    points = _projective_points(field)
    if cap is None:
        cap = len(points)
    mons = monomials(2, n)
    target = [T[e] for e in mons]
    columns = [[power(v, n, field)[e] for e in mons] for v in points]
    for r in range(0, min(cap, len(points)) + 1):
        if r == 0:
            if all(x == 0 for x in target):
                return 0
            continue
        for subset in itertools.combinations(range(len(points)), r):
            A = [[columns[j][row] for j in subset] for row in range(len(mons))]
            if solve_linear(A, target, field) is not None:
                return r
    return None


def pairwise_independent(vectors, field=None) -> bool:
    for u, v in itertools.combinations(vectors, 2):
        if matrix_rank([list(u), list(v)], field) < 2:
            return False
    return all(any(x != 0 for x in v) for v in vectors)


def power_independence_check(vectors, n: int, field=QQ) -> bool:
    """Whether the tensor powers ``v^{⊗n}`` are linearly independent, by the
    rank of their monomial-coordinate matrix."""
    vectors = [[field(x) for x in v] for v in vectors]
    if not pairwise_independent(vectors, field):
        raise ValueError("vectors must be nonzero and pairwise linearly independent")
    if not vectors:
        return True
    dim = len(vectors[0])
    mons = monomials(dim, n)
    rows = [[power(v, n, field)[e] for e in mons] for v in vectors]
    return matrix_rank(rows, field) == len(vectors)


def coordinate_count(dim: int, order: int) -> int:
    return comb(dim + order - 1, order) if dim else int(order == 0)
