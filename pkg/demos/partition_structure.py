"""Degree-2 matroidal ideals are exactly partition ideals.

Walks the census for small n and shows that every full-support matroidal
ideal of degree 2 is cut out by a partition of the variables: a product
x_i*x_j is a generator precisely when i and j are in different blocks.
The census count is the number of partitions with at least two blocks.
"""

from matroidalkit import partition_degree2
from matroidalkit.matroids import dedupe_up_to_relabeling, enumerate_matroidal


def partitions_with_two_plus_blocks(n):
    # Bell(n) minus the one-block partition
    bell = [[1]]
    for row in range(1, n + 1):
        prev = bell[-1]
        new = [prev[-1]]
        for value in prev:
            new.append(new[-1] + value)
        bell.append(new)
    return bell[n][0] - 1


def main():
    for n in range(3, 7):
        census = enumerate_matroidal(n, 2)
        expected = partitions_with_two_plus_blocks(n)
        print(f"n={n}: {len(census)} matroidal ideals of degree 2 "
              f"(= {expected} partitions of [{n}] with >= 2 blocks)")
        assert len(census) == expected
        classes = dedupe_up_to_relabeling(census)
        print(f"      {len(classes)} classes up to relabeling:")
        for ideal in classes:
            part = partition_degree2(ideal)
            shape = sorted((len(b) for b in part.blocks), reverse=True)
            blocks = " | ".join(
                "{" + ",".join(str(i) for i in sorted(b)) + "}"
                for b in sorted(part.blocks, key=lambda b: (-len(b), min(b))))
            print(f"        shape {shape}: {blocks}   {ideal}")
        print()


if __name__ == "__main__":
    main()
