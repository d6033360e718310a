"""Exchange-property checks and the named families built from them.

The exchange check is the workhorse: an ideal generated in a single degree
is polymatroidal when every ordered generator pair admits an exchange at
every separating variable. Square-free plus polymatroidal is matroidal, and
then generator supports form the bases of a matroid. Enumeration over all
collections of square-free degree-d monomials runs on packed bitmasks; the
survivors are rebuilt as ideals through the ordinary constructors.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

from .errors import DomainError
from .ideals import Monomial, MonomialIdeal, make_ideal, squarefree_monomials

NOT_SINGLE_DEGREE = "not_single_degree"
NO_EXCHANGE_INDEX = "no_exchange_index"

# brute-force relabeling below walks all n! permutations
ENUMERATION_MAX_N = 7


@dataclass(frozen=True)
class ExchangeCertificate:
    """Outcome of the exchange check.

    holds is true when the ideal passed. Otherwise reason says why:
    NOT_SINGLE_DEGREE when generators mix degrees (no witness in that
    case), NO_EXCHANGE_INDEX with failure_witness = (u, v, i) meaning
    deg_{x_i}(u) > deg_{x_i}(v) but no admissible j exists.
    """

    holds: bool
    reason: str | None = None
    failure_witness: tuple | None = None


def is_polymatroidal(ideal):
    """Exchange check on the minimal generators.

    Returns a certificate; on failure the witness pins down a concrete
    ordered pair and variable index with no exchange partner. Membership
    of the exchanged monomial reduces to a set lookup because it has the
    same degree as every generator.
    """
    if ideal.is_zero:
        raise DomainError("exchange property undefined for the zero ideal")
    degrees = {g.degree for g in ideal.gens}
    if len(degrees) != 1:
        return ExchangeCertificate(holds=False, reason=NOT_SINGLE_DEGREE)
    gen_exps = {g.exponents for g in ideal.gens}
    for u, v in itertools.permutations(ideal.gens, 2):
        ue, ve = u.exponents, v.exponents
        for i in range(ideal.n):
            if ue[i] <= ve[i]:
                continue
            lowered = list(ue)
            lowered[i] -= 1
            for j in range(ideal.n):
                if ve[j] > ue[j]:
                    lowered[j] += 1
                    if tuple(lowered) in gen_exps:
                        break
                    lowered[j] -= 1
            else:
                witness = (u, v, i + 1)
                return ExchangeCertificate(holds=False, reason=NO_EXCHANGE_INDEX,
                                           failure_witness=witness)
    return ExchangeCertificate(holds=True)


def is_matroidal(ideal):
    """Square-free and polymatroidal."""
    if ideal.is_zero:
        raise DomainError("exchange property undefined for the zero ideal")
    return ideal.is_squarefree and is_polymatroidal(ideal).holds


def squarefree_veronese(n, d):
    """Ideal of all square-free degree-d monomials in n variables."""
    if not 1 <= d <= n:
        raise DomainError(f"square-free Veronese needs 1 <= d <= n, got d={d}, n={n}")
    return make_ideal(n, squarefree_monomials(n, d))


def veronese(n, d):
    """The d-th power of the maximal ideal: all degree-d monomials."""
    if d < 1:
        raise DomainError(f"Veronese degree must be positive, got {d}")
    gens = []
    for combo in itertools.combinations_with_replacement(range(1, n + 1), d):
        exps = [0] * n
        for i in combo:
            exps[i - 1] += 1
        gens.append(Monomial(tuple(exps)))
    return make_ideal(n, gens)


def transversal(n, blocks):
    """Product of the variable ideals (x_b : b in B_i) over the given blocks."""
    blocks = [frozenset(b) for b in blocks]
    if not blocks:
        raise DomainError("transversal needs at least one block")
    for b in blocks:
        if not b:
            raise DomainError("transversal blocks must be nonempty")
    result = MonomialIdeal.unit(n)
    for b in blocks:
        result = result * make_ideal(n, [Monomial.variable(n, i) for i in sorted(b)])
    return result


def generate_family(kind, n, params):
    """Dispatch to one of the named constructions by kind string."""
    if kind == "squarefree_veronese":
        return squarefree_veronese(n, params)
    if kind == "veronese":
        return veronese(n, params)
    if kind == "transversal":
        return transversal(n, params)
    raise DomainError(f"unknown family kind {kind!r}")


def is_squarefree_veronese(ideal):
    """True iff the generators are all C(n,d) square-free degree-d monomials.

    Counting suffices: distinct square-free generators of one degree d are
    a subset of the full degree-d layer, so equal cardinality means equal
    sets. The unit ideal passes as the degenerate d=0 layer.
    """
    summary = ideal.summarize()
    if not (summary.is_squarefree and summary.is_single_degree):
        return False
    return ideal.mu == math.comb(ideal.n, summary.degree)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _collection_exchange(masks, members):
    """Basis exchange over support bitmasks; members is the set of masks."""
    for b1 in masks:
        for b2 in masks:
            if b1 == b2:
                continue
            only2 = b2 & ~b1
            for e in _bits(b1 & ~b2):
                base = b1 ^ e
                if not any(base | f in members for f in _bits(only2)):
                    return False
    return True


@functools.lru_cache(maxsize=None)
def enumerate_matroidal(n, d, full_support_only=True):
    """All matroidal ideals generated in degree d, in a fixed order.

    Walks every nonempty collection of square-free degree-d monomials by
    bitmask over the lex-ordered monomial list, keeping the collections
    whose supports satisfy basis exchange. The search space is 2^C(n,d),
    hence the hard guard. Results are cached per (n, d, flag).
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise DomainError(f"enumeration limited to 1 <= n <= {ENUMERATION_MAX_N}, got n={n}")
    if not 1 <= d <= n:
        raise DomainError(f"enumeration needs 1 <= d <= n, got d={d}, n={n}")
    layer = squarefree_monomials(n, d)
    layer_masks = [m.bitmask() for m in layer]
    count = len(layer)
    full = (1 << n) - 1
    found = []
    for selector in range(1, 1 << count):
        masks = [layer_masks[k] for k in range(count) if (selector >> k) & 1]
        if full_support_only:
            covered = 0
            for m in masks:
                covered |= m
            if covered != full:
                continue
        if _collection_exchange(masks, set(masks)):
            found.append(make_ideal(n, [layer[k] for k in range(count)
                                        if (selector >> k) & 1]))
    return tuple(found)


def _occurrence_signature(ideal):
    counts = [0] * ideal.n
    for g in ideal.gens:
        for i in g.support:
            counts[i - 1] += 1
    return tuple(sorted(counts))


def _relabel(ideal, perm):
    """Apply the variable permutation perm (perm[i-1] is the new index of x_i)."""
    moved = []
    for g in ideal.gens:
        exps = [0] * ideal.n
        for i, e in enumerate(g.exponents, start=1):
            exps[perm[i - 1] - 1] = e
        moved.append(Monomial(tuple(exps)))
    return make_ideal(ideal.n, moved)


def dedupe_up_to_relabeling(ideals):
    """Keep one representative per variable-relabeling class.

    Groups by sorted variable occurrence counts first, then brute-forces
    all permutations inside a group to find the lexicographically least
    relabeled generator tuple. Intended for small n only.
    """
    seen = {}
    for ideal in ideals:
        if ideal.n > ENUMERATION_MAX_N:
            raise DomainError(f"relabeling pass limited to n <= {ENUMERATION_MAX_N}")
        perms = itertools.permutations(range(1, ideal.n + 1))
        least = min(tuple(g.exponents for g in _relabel(ideal, p).gens) for p in perms)
        key = (_occurrence_signature(ideal), least)
        seen.setdefault(key, ideal)
    return tuple(seen.values())
