"""Finitely generated linearly ordered abelian groups with exact order decisions.

An ``OrderedGroup`` is Z^r together with a translation-invariant linear
order, given by one of two backends:

* ``Lex`` -- lexicographic comparison of exponent vectors, most significant
  coordinate first.
* ``RealEmbedding`` -- each generator is assigned a weight a + b*sqrt(d)
  with rational a, b and a fixed square-free positive integer d; elements
  are ordered by the real number they map to.  Signs of quadratic
  irrationals are decided exactly in integer arithmetic, so the positive
  cone is well defined all the way down to zero.

The rotation index of an element counts the order interval [0, chi); the
count may be infinite, and finiteness is certified analytically per
backend, never by a bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    CapacityError,
    PreconditionError,
    RankMismatchError,
    UnsupportedWindowError,
)

#: Largest supported rank.  Dual-torus grids cost n^r samples, so ranks
#: beyond 4 are rejected outright.
MAX_RANK = 4

LESS, EQUAL, GREATER = -1, 0, 1


class _InfiniteType:
    """Singleton marker for an infinite interval count / rotation index."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"


INFINITE = _InfiniteType()

IndexValue = Union[int, _InfiniteType]


def is_infinite(value: IndexValue) -> bool:
    return value is INFINITE


@dataclass(frozen=True)
class GroupElement:
    """Element of Z^r as an exponent vector; arithmetic is exact and componentwise."""

    exponents: tuple[int, ...]

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if len(exps) < 1:
            raise RankMismatchError("group elements need rank >= 1")
        object.__setattr__(self, "exponents", exps)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        _check_rank(self, other)
        return GroupElement(a + b for a, b in zip(self.exponents, other.exponents))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        _check_rank(self, other)
        return GroupElement(a - b for a, b in zip(self.exponents, other.exponents))

    def __neg__(self) -> "GroupElement":
        return GroupElement(-a for a in self.exponents)

    def scale(self, n: int) -> "GroupElement":
        return GroupElement(n * a for a in self.exponents)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.exponents)

    def __repr__(self):
        return f"GroupElement{self.exponents}"


def _check_rank(a: GroupElement, b: GroupElement) -> None:
    if a.rank != b.rank:
        raise RankMismatchError(f"rank mismatch: {a.rank} vs {b.rank}")


def _is_square_free(d: int) -> bool:
    if d < 1:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def quadratic_sign(p: Fraction, q: Fraction, d: int) -> int:
    """Exact sign of p + q*sqrt(d) for rational p, q and positive integer d.

    If p and q share a sign (or q = 0) the sign is sign(p) resp. sign(q);
    in the mixed case the sign equals sign(p) * sign(p^2 - d*q^2), since
    p + q*sqrt(d) and (p + q*sqrt(d))(p - q*sqrt(d)) = p^2 - d*q^2 share
    their sign exactly when p - q*sqrt(d) > 0, i.e. when sign(p) = +1.
    """
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if q == 0:
        return sp
    if p == 0:
        return sq
    if sp == sq:
        return sp
    disc = p * p - d * q * q
    return sp * ((disc > 0) - (disc < 0))


@dataclass(frozen=True)
class Lex:
    """Lexicographic order, most significant coordinate first."""

    def sign(self, exponents: tuple[int, ...]) -> int:
        for e in exponents:
            if e != 0:
                return GREATER if e > 0 else LESS
        return EQUAL

    def descriptor(self):
        return "lex"


@dataclass(frozen=True)
class RealEmbedding:
    """Order induced by the embedding v -> sum_i v_i * (a_i + b_i*sqrt(d)).

    ``weights`` is a tuple of (a, b) pairs of Fractions.  The embedding is
    injective (hence the order linear) iff the weights are linearly
    independent over Q.  That is checked exactly for rank <= 2.  For rank
    greater than 2 the caller must pass ``assume_independent=True`` to the
    ``OrderedGroup`` constructor; note that rank >= 3 weights drawn from a
    single quadratic field are never Q-independent (the field is a
    2-dimensional Q-vector space), so such orders degenerate to preorders
    and the lexicographic backend should be used instead.
    """

    d: int
    weights: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, d: int, weights: Iterable[tuple]):
        d = int(d)
        if not _is_square_free(d):
            raise PreconditionError(f"d={d} must be a square-free positive integer")
        ws = tuple((Fraction(a), Fraction(b)) for a, b in weights)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "weights", ws)

    def value_parts(self, exponents: tuple[int, ...]) -> tuple[Fraction, Fraction]:
        p = Fraction(0)
        q = Fraction(0)
        for v, (a, b) in zip(exponents, self.weights):
            p += v * a
            q += v * b
        return p, q

    def sign(self, exponents: tuple[int, ...]) -> int:
        p, q = self.value_parts(exponents)
        if self.d == 1:
            # sqrt(1) = 1: the weight is the rational p + q.
            s = p + q
            return (s > 0) - (s < 0)
        return quadratic_sign(p, q, self.d)

    def weight_is_zero(self, i: int) -> bool:
        a, b = self.weights[i]
        if self.d == 1:
            return a + b == 0
        return a == 0 and b == 0

    def pair_dependent(self, i: int, j: int) -> bool:
        # w_j / w_i is rational iff the sqrt(d)-component of the quotient
        # vanishes: (a_i*b_j - a_j*b_i) = 0.  With d = 1 every weight is
        # rational, so every pair is dependent.
        if self.d == 1:
            return True
        ai, bi = self.weights[i]
        aj, bj = self.weights[j]
        return ai * bj - aj * bi == 0

    def descriptor(self):
        return {
            "embedding": {
                "d": self.d,
                "weights": [
                    [[a.numerator, a.denominator], [b.numerator, b.denominator]]
                    for a, b in self.weights
                ],
            }
        }


Backend = Union[Lex, RealEmbedding]


@dataclass(frozen=True)
class OrderedGroup:
    """Z^rank with a fixed linear order backend.

    Immutable after construction; all operations are pure.
    """

    rank: int
    backend: Backend

    def __init__(self, rank: int, backend: Backend, *, assume_independent: bool = False):
        rank = int(rank)
        if rank < 1 or rank > MAX_RANK:
            raise PreconditionError(f"rank must be in [1, {MAX_RANK}], got {rank}")
        if isinstance(backend, RealEmbedding):
            if len(backend.weights) != rank:
                raise PreconditionError(
                    f"{len(backend.weights)} weights for rank {rank}"
                )
            for i in range(rank):
                if backend.weight_is_zero(i):
                    raise PreconditionError(f"weight {i} is zero; embedding not injective")
            if rank == 2 and backend.pair_dependent(0, 1):
                raise PreconditionError(
                    "weight ratio w2/w1 is rational; order would not be linear"
                )
            if rank > 2 and not assume_independent:
                raise PreconditionError(
                    "Q-independence is only checked for rank <= 2; pass "
                    "assume_independent=True to take responsibility for rank > 2"
                )
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "backend", backend)

    # -- order primitives ---------------------------------------------------

    def sign(self, a: GroupElement) -> int:
        """Exact sign of a under the order: -1, 0 or +1."""
        if a.rank != self.rank:
            raise RankMismatchError(f"element rank {a.rank} != group rank {self.rank}")
        return self.backend.sign(a.exponents)

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    def compare(self, a: GroupElement, b: GroupElement) -> int:
        """Total order: LESS/EQUAL/GREATER.  Translation invariant by construction."""
        _check_rank(a, b)
        return self.sign(a - b)

    def is_positive(self, a: GroupElement) -> bool:
        """Membership in the positive cone (identity included)."""
        return self.sign(a) >= 0

    # -- rotation index -----------------------------------------------------

    def interval_count(self, chi: GroupElement) -> IndexValue:
        """Cardinality of the order interval [0, chi), or INFINITE.

        The counted set is {xi : 0 <= xi < chi}.  It equals the set
        difference (positive cone) \\ (chi + positive cone): xi lies in the
        cone iff 0 <= xi, and xi in chi + cone iff chi <= xi, which by
        totality of the order is the exact complement of xi < chi.

        Finiteness is certified per backend:
        * rank 1: always finite, count = |coordinate| (the order is Z's,
          possibly reversed when an embedding weight is negative);
        * Lex: finite iff every coordinate except the last is 0 (otherwise
          n -> (0,...,n,...) injects an infinite set below chi);
        * RealEmbedding, rank >= 2 with Q-independent weights: the image
          subgroup is dense in R, so [0, chi) is infinite unless chi = 0.
        """
        if not self.is_positive(chi):
            raise PreconditionError(f"{chi} is not in the positive cone")
        exps = chi.exponents
        if self.rank == 1:
            return abs(exps[0])
        if isinstance(self.backend, Lex):
            if any(e != 0 for e in exps[:-1]):
                return INFINITE
            return abs(exps[-1])
        return 0 if chi.is_zero() else INFINITE

    def rotation_index(self, chi: GroupElement) -> IndexValue:
        """Signed interval count: additive where finite, INFINITE otherwise."""
        if self.is_positive(chi):
            return self.interval_count(chi)
        count = self.interval_count(-chi)
        return INFINITE if is_infinite(count) else -count

    def _positive_unit(self) -> GroupElement:
        """Smallest positive element of the (unique) finite-interval direction."""
        if self.rank == 1:
            e = GroupElement((1,))
            return e if self.is_positive(e) else -e
        # Lex: the last coordinate direction is the only one with finite
        # intervals, and (0,...,0,1) is positive.
        return GroupElement((0,) * (self.rank - 1) + (1,))

    def enumerate_interval(self, chi: GroupElement, cap: int) -> list[GroupElement]:
        """The elements of [0, chi) in increasing order; errors if > cap or infinite."""
        count = self.interval_count(chi)
        if is_infinite(count):
            raise CapacityError(f"interval [0, {chi}) is infinite")
        if count > cap:
            raise CapacityError(f"interval has {count} elements, cap is {cap}")
        unit = self._positive_unit()
        return [unit.scale(j) for j in range(count)]

    def positive_prefix(self, n: int) -> list[GroupElement]:
        """The n smallest elements of the positive cone (rank 1 only).

        For rank > 1 the cone has no order-type-omega prefix; callers must
        use a box window instead.
        """
        if self.rank != 1:
            raise UnsupportedWindowError(
                "positive_prefix is defined only for rank 1; use a Box window"
            )
        if n < 1:
            raise PreconditionError("window size must be positive")
        unit = self._positive_unit()
        return [unit.scale(j) for j in range(n)]

    def descriptor(self):
        """JSON-ready group descriptor."""
        return {"rank": self.rank, "order": self.backend.descriptor()}

    def __repr__(self):
        kind = "lex" if isinstance(self.backend, Lex) else f"embedding(d={self.backend.d})"
        return f"OrderedGroup(rank={self.rank}, {kind})"


def lex_group(rank: int) -> OrderedGroup:
    return OrderedGroup(rank, Lex())


def integers() -> OrderedGroup:
    """Z with its usual order."""
    return lex_group(1)


def embedding_group(
    d: int, weights: Iterable[tuple], *, assume_independent: bool = False
) -> OrderedGroup:
    """Group ordered by real embedding; weights are (a, b) pairs meaning a + b*sqrt(d)."""
    backend = RealEmbedding(d, weights)
    return OrderedGroup(len(backend.weights), backend, assume_independent=assume_independent)
