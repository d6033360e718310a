"""Monomials and monomial ideals with exact integer arithmetic.

Variables are 1-indexed as x1..xn. A monomial is an exponent vector; an
ideal is its unique minimal generating set, stored in a canonical order so
that equal ideals compare equal structurally. Everything here is immutable
and field-free: no coefficients, no floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import StructuralError


@dataclass(frozen=True)
class Monomial:
    """A monomial x1^e1 * ... * xn^en as its exponent tuple."""

    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise StructuralError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def variable(cls, n, i):
        """The monomial x_i in n variables."""
        if not 1 <= i <= n:
            raise StructuralError(f"variable index {i} outside 1..{n}")
        return cls(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @classmethod
    def from_support(cls, n, support):
        """Square-free monomial whose support is the given set of indices."""
        support = frozenset(support)
        if not support <= set(range(1, n + 1)):
            raise StructuralError(f"support {sorted(support)} outside 1..{n}")
        return cls(tuple(1 if k in support else 0 for k in range(1, n + 1)))

    @classmethod
    def from_bitmask(cls, n, mask):
        """Square-free monomial from a bitmask (bit i-1 set means x_i occurs)."""
        if mask < 0 or mask >= 1 << n:
            raise StructuralError(f"bitmask {mask} outside [0, 2^{n})")
        return cls(tuple((mask >> k) & 1 for k in range(n)))

    @property
    def n(self):
        return len(self.exponents)

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def support(self):
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    @property
    def is_one(self):
        return not any(self.exponents)

    def degree_in(self, i):
        """Exponent of x_i."""
        return self.exponents[i - 1]

    def bitmask(self):
        """Bitmask view of a square-free monomial; inverse of from_bitmask."""
        if not self.is_squarefree:
            raise StructuralError(f"{self} is not square-free")
        mask = 0
        for k, e in enumerate(self.exponents):
            mask |= e << k
        return mask

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other):
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other):
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other):
        """Exact quotient; the divisor must divide self."""
        if not other.divides(self):
            raise StructuralError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self):
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


def squarefree_monomials(n, d):
    """All square-free degree-d monomials in n variables, supports in lex order."""
    return tuple(Monomial.from_support(n, c)
                 for c in itertools.combinations(range(1, n + 1), d))


def _minimalize(monomials):
    """Drop every monomial strictly divisible by another; dedupe."""
    distinct = set(monomials)
    kept = [m for m in distinct
            if not any(g is not m and g != m and g.divides(m) for g in distinct)]
    # descending lex on exponent vectors, so x1-dominant generators come first
    kept.sort(key=lambda m: m.exponents, reverse=True)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    gens is the unique minimal generating set, in descending lexicographic
    order of exponent vectors, so equality of ideals is equality of fields.
    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    n: int
    gens: tuple

    def __post_init__(self):
        if self.n < 1:
            raise StructuralError(f"need at least one variable, got n={self.n}")
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.n != self.n:
                raise StructuralError(
                    f"generator {g} has {g.n} exponents, ambient n={self.n}")
        exps = [g.exponents for g in self.gens]
        if any(a <= b for a, b in zip(exps, exps[1:])):
            raise StructuralError("generators out of canonical order; use make_ideal")
        # distinct same-degree monomials never divide one another, so the
        # pairwise scan is only owed when degrees mix
        if len({g.degree for g in self.gens}) > 1:
            for a, b in itertools.combinations(self.gens, 2):
                if a.divides(b) or b.divides(a):
                    raise StructuralError(f"generators {a}, {b} are not minimal")

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def unit(cls, n):
        return cls(n, (Monomial.one(n),))

    @classmethod
    def maximal(cls, n):
        """The ideal generated by all the variables."""
        return make_ideal(n, [Monomial.variable(n, i) for i in range(1, n + 1)])

    @classmethod
    def from_supports(cls, n, supports):
        """Square-free ideal generated by the monomials with the given supports."""
        return make_ideal(n, [Monomial.from_support(n, s) for s in supports])

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def mu(self):
        """Number of minimal generators."""
        return len(self.gens)

    @property
    def support(self):
        return frozenset().union(*(g.support for g in self.gens)) if self.gens else frozenset()

    @property
    def is_squarefree(self):
        return all(g.is_squarefree for g in self.gens)

    def contains(self, u):
        """Monomial membership: some minimal generator divides u."""
        if u.n != self.n:
            raise StructuralError(f"{u} has {u.n} exponents, ambient n={self.n}")
        return any(g.divides(u) for g in self.gens)

    def colon(self, u):
        """The colon ideal (I : u) for a monomial u."""
        if self.is_zero:
            return self
        return make_ideal(self.n, [g / g.gcd(u) for g in self.gens])

    def intersect(self, other):
        """Intersection via the pairwise lcm table."""
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        return make_ideal(self.n, [g.lcm(h) for g in self.gens for h in other.gens])

    def product(self, other):
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        return make_ideal(self.n, [g * h for g in self.gens for h in other.gens])

    def __mul__(self, other):
        return self.product(other)

    def plus(self, other):
        """The sum I + J, minimalized."""
        self._check_ambient(other)
        return make_ideal(self.n, list(self.gens) + list(other.gens))

    def adjoin(self, u):
        """I + (u) without rebuilding from scratch.

        Keeps every generator u does not divide; those already fail to
        divide each other and none divides u (u would then lie in I).
        """
        if self.contains(u):
            return self
        kept = [g for g in self.gens if not u.divides(g)]
        kept.append(u)
        kept.sort(key=lambda m: m.exponents, reverse=True)
        return MonomialIdeal(self.n, tuple(kept))

    def squarefree_members(self, degree):
        """Square-free degree-d monomials lying in the ideal, lex order."""
        return tuple(m for m in squarefree_monomials(self.n, degree)
                     if self.contains(m))

    def summarize(self):
        degrees = {g.degree for g in self.gens}
        single = len(degrees) == 1
        return IdealSummary(
            is_squarefree=self.is_squarefree,
            is_single_degree=single,
            degree=degrees.pop() if single else None,
            is_full_supported=self.support == frozenset(range(1, self.n + 1)),
            mu=self.mu,
        )

    def _check_ambient(self, other):
        if other.n != self.n:
            raise StructuralError(f"ambient mismatch: n={self.n} vs n={other.n}")

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


@dataclass(frozen=True)
class IdealSummary:
    """Shape report for one ideal. degree is set only when single-degree."""

    is_squarefree: bool
    is_single_degree: bool
    degree: int | None
    is_full_supported: bool
    mu: int


def make_ideal(n, raw_gens):
    """Build the ideal generated by raw_gens, minimalizing as needed.

    Accepts Monomials or plain exponent sequences. Idempotent: feeding an
    ideal's own generators back in reproduces the same ideal.
    """
    monomials = []
    for g in raw_gens:
        m = g if isinstance(g, Monomial) else Monomial(tuple(g))
        if m.n != n:
            raise StructuralError(f"generator {m} has {m.n} exponents, expected {n}")
        monomials.append(m)
    return MonomialIdeal(n, _minimalize(monomials))
