"""Two transversal ideals, one unmixed and one not, and why.

The two-block ideal on four variables is the smallest interesting
unmixed example; moving to blocks of sizes 2 and 3 on five variables
breaks unmixedness even though every colon by a variable stays unmixed.
The block-count identity m*(n - height) = n separates the two cases, as
does asking the colons to share one height.
"""

from matroidalkit import (Monomial, associated_primes, criteria_check,
                          partition_degree2, transversal)


def describe(ideal):
    n = ideal.n
    print(f"I = {ideal}  (n = {n})")
    dec = associated_primes(ideal)
    primes = ", ".join(
        "(" + ",".join(f"x{i}" for i in sorted(p)) + ")"
        for p in sorted(dec.ass, key=lambda p: (len(p), sorted(p))))
    print(f"  Ass = {primes}")
    print(f"  height {dec.height}, big height {dec.big_height}, "
          f"unmixed: {dec.is_unmixed}")

    part = partition_degree2(ideal)
    report = criteria_check(ideal)
    m = part.m
    print(f"  partition blocks m = {m}; "
          f"identity m*(n-height) = {m}*({n}-{dec.height}) = "
          f"{m * (n - dec.height)} vs n = {n}  -> {report.c1_identity}")

    heights = {}
    for i, h, unmixed in report.colon_facts:
        heights.setdefault(h, []).append(i)
        assert unmixed, "every colon by a variable is unmixed here"
    for h, vars_ in sorted(heights.items()):
        names = ", ".join(f"(I:x{i})" for i in vars_)
        print(f"  {names} unmixed of height {h}")
    print(f"  all colons share one height: {report.t2_condition}")
    print()


def main():
    describe(transversal(4, [{1, 2}, {3, 4}]))
    describe(transversal(5, [{1, 2}, {3, 4, 5}]))

    I = transversal(5, [{1, 2}, {3, 4, 5}])
    x3 = Monomial.variable(5, 3)
    print("the five-variable ideal fails both criteria for the same reason:")
    print(f"  (I:x3) = {I.colon(x3)} remembers the small block,")
    x1 = Monomial.variable(5, 1)
    print(f"  (I:x1) = {I.colon(x1)} remembers the big one.")


if __name__ == "__main__":
    main()
