"""Layered sums that generate a square-free ideal up to radical.

The layers stack the square-free members of the ideal by degree, top
degree first: P_0 holds the full product x1*...*xn alone and P_j holds
the members of degree n-j, down to the generating degree. Each layer is
summed (all coefficients 1) into one polynomial, and r+1 = n-d+1 such
sums suffice: pairwise products inside a layer are divisible by an
earlier-layer element, which is what the layered-sum argument needs.
Together with the projective-dimension lower bound this pins the
arithmetical rank of a matroidal ideal at exactly n-d+1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, TheoremViolationError
from .homology import pd_depth
from .ideals import Monomial
from .groebner import Polynomial
from .matroids import is_matroidal

CONDITION_UNION = "union_covers_ideal"
CONDITION_SINGLETON = "first_layer_singleton"
CONDITION_PRODUCTS = "pair_products_absorbed"


@dataclass(frozen=True)
class SVWitness:
    """Layer structure plus the summed witness polynomials.

    layers runs P_0..P_r with r = n - d; q holds the corresponding sums
    over the rationals. ara_upper is the layer count r + 1; ara_lower is
    the projective dimension of R/I; ara_exact marks the two meeting.
    """

    d: int
    r: int
    layers: tuple
    q: tuple
    ara_upper: int
    ara_lower: int
    ara_exact: bool


@dataclass(frozen=True)
class SVConditionReport:
    """First violated layer condition, if any; truthy when all hold."""

    ok: bool
    violated: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def build_sv_witness(ideal):
    """Layer the square-free members of the ideal by descending degree.

    Every layer is checked nonempty, the top layer is checked to be the
    lone full product, and for matroidal input the resulting bounds must
    meet; each of those is a proved fact, so failure raises rather than
    returning a defective witness.
    """
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("witness needs a proper nonzero ideal")
    if not ideal.is_squarefree:
        raise DomainError("witness construction is square-free only")
    summary = ideal.summarize()
    if not summary.is_full_supported:
        raise DomainError("witness construction requires full support")
    n = ideal.n
    d = min(g.degree for g in ideal.gens)
    if d < 2:
        raise DomainError("degree-1 input uses the plain variable witness; see ara_report")
    r = n - d
    layers = []
    for j in range(r + 1):
        layer = ideal.squarefree_members(n - j)
        if not layer:
            raise TheoremViolationError(
                f"empty layer at degree {n - j} for full-support {ideal}")
        layers.append(layer)
    full_product = Monomial.from_support(n, range(1, n + 1))
    if layers[0] != (full_product,):
        raise TheoremViolationError(f"top layer of {ideal} is not the full product")
    lower = pd_depth(ideal).pd
    upper = r + 1
    exact = lower == upper
    if is_matroidal(ideal) and not exact:
        raise TheoremViolationError(
            f"bounds {lower} < {upper} fail to meet on matroidal {ideal}")
    return SVWitness(
        d=d,
        r=r,
        layers=tuple(layers),
        q=tuple(Polynomial.sum_of(layer) for layer in layers),
        ara_upper=upper,
        ara_lower=lower,
        ara_exact=exact,
    )


def verify_sv_conditions(layers, ideal):
    """Mechanical check of the three layered-sum conditions.

    (a) the layers exactly cover the square-free members of the ideal,
    (b) the first layer is a singleton, (c) any two distinct elements of
    a later layer have their product divisible by some earlier-layer
    element. Returns a report, never raises: adversarial layers are a
    legitimate input here.
    """
    layers = [tuple(layer) for layer in layers]
    if not layers:
        return SVConditionReport(False, CONDITION_SINGLETON, ())
    members = set()
    for k in range(ideal.n + 1):
        members.update(ideal.squarefree_members(k))
    layered = set().union(*map(set, layers))
    if layered != members:
        stray = sorted(layered ^ members, key=lambda m: m.exponents)
        return SVConditionReport(False, CONDITION_UNION, (stray[0],))
    if len(layers[0]) != 1:
        return SVConditionReport(False, CONDITION_SINGLETON, tuple(layers[0]))
    for i in range(1, len(layers)):
        earlier = [p for j in range(i) for p in layers[j]]
        for a in range(len(layers[i])):
            for b in range(a + 1, len(layers[i])):
                p, pp = layers[i][a], layers[i][b]
                product = p * pp
                if not any(q.divides(product) for q in earlier):
                    return SVConditionReport(False, CONDITION_PRODUCTS, (i, p, pp))
    return SVConditionReport(True)


@dataclass(frozen=True)
class AraReport:
    """Arithmetical rank bounds for one matroidal ideal.

    elements lists polynomials generating the ideal up to radical; their
    count is the upper bound. witness is None exactly in degree 1, where
    the variables themselves are the elements.
    """

    n: int
    degree: int
    lower: int
    upper: int
    exact: bool
    witness: SVWitness | None
    elements: tuple


def ara_report(ideal):
    """Bounds on the arithmetical rank, exact for matroidal input.

    Degree 1 with full support means the whole maximal ideal, where the
    variables are their own witness and the rank is n. From degree 2 on
    the layered witness gives the upper bound and the projective
    dimension the lower one. lower > upper is impossible; it raises.
    """
    summary = ideal.summarize()
    if not summary.is_full_supported:
        raise DomainError("rank report requires full support")
    if not is_matroidal(ideal):
        raise DomainError("rank report is stated for matroidal ideals only")
    n = ideal.n
    d = summary.degree
    if d == 1:
        lower = pd_depth(ideal).pd
        if lower != n:
            raise TheoremViolationError(f"projective dimension {lower} != {n} for {ideal}")
        elements = tuple(Polynomial.from_monomial(g) for g in ideal.gens)
        return AraReport(n=n, degree=d, lower=lower, upper=n, exact=True,
                         witness=None, elements=elements)
    witness = build_sv_witness(ideal)
    if witness.ara_lower > witness.ara_upper:
        raise TheoremViolationError(
            f"lower bound {witness.ara_lower} exceeds upper {witness.ara_upper} on {ideal}")
    return AraReport(
        n=n,
        degree=d,
        lower=witness.ara_lower,
        upper=witness.ara_upper,
        exact=witness.ara_exact,
        witness=witness,
        elements=witness.q,
    )
