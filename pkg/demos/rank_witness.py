"""Layered sums that generate a matroidal ideal up to radical.

Builds the witness for the two-block ideal on four variables: layer the
square-free members by descending degree, sum each layer, and the n-d+1
sums cut out the same vanishing locus as the whole ideal. The projective
dimension matches from below, so the arithmetical rank is exactly 3 here
and the Groebner engine re-checks the radical equality from scratch.
"""

from matroidalkit import (build_sv_witness, certify_witness, pd_depth,
                          transversal, verify_sv_conditions)


def main():
    I = transversal(4, [{1, 2}, {3, 4}])
    print(f"I = {I}")
    print(f"pd(R/I) = {pd_depth(I).pd}  (lower bound for the rank)\n")

    witness = build_sv_witness(I)
    for j, (layer, q) in enumerate(zip(witness.layers, witness.q)):
        shown = ", ".join(str(m) for m in layer)
        print(f"  P_{j} = {{{shown}}}")
        print(f"  q_{j} = {q}\n")

    conditions = verify_sv_conditions(witness.layers, I)
    print(f"layer conditions hold: {bool(conditions)}")
    print(f"rank bounds: {witness.ara_lower} <= ara(I) <= {witness.ara_upper}"
          f"  exact: {witness.ara_exact}\n")

    for field, label in ((None, "rationals"), (32003, "GF(32003)")):
        cert = certify_witness(I, witness, field)
        print(f"radical certification over {label}: "
              f"{'passed' if cert.passed else 'FAILED'}")

    # drop the top sum and the certificate must notice
    broken = certify_witness(I, witness.q[1:])
    lost = ", ".join(str(u) for u in broken.failing_generators)
    print(f"\nwithout q_0 the radical shrinks; generators no longer caught: {lost}")


if __name__ == "__main__":
    main()
