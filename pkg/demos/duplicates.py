"""Duplicate a base algebra along an (endomorphism, delta) pair.

The construction adjoins one generator X per basis idempotent with the
rule X*a = delta(a) + f(a)*X, and lands back in the twisting-map world:
each valid pair is a twisting map against k[X]/(X^2 - X).
"""

import itertools

from twistlab import (
    GF,
    QQ,
    build_duplicate,
    classify_4dim,
    duplicate_to_twisting_map,
    roundtrip_candidate,
    roundtrip_datum,
    twisted_product,
    verify_axioms,
    verify_pair,
)


def main() -> None:
    print("swap-with-rank-one-delta duplicates of k^2, parameters (a_u, a_v)")
    print()

    f5 = GF(5)
    good = []
    for au, av in itertools.product(range(5), repeat=2):
        if verify_axioms(roundtrip_candidate(f5, au, av))["associative"]:
            good.append((au, av))
    print(f"scan over GF(5): {len(good)} of 25 parameter pairs are associative")
    print(f"  {good}")
    print("  exactly the line a_u + a_v + 1 = 0:",
          all((au + av + 1) % 5 == 0 for au, av in good))
    print()

    d = roundtrip_datum(QQ, 1, -2)
    print("datum (a_u, a_v) = (1, -2) over Q:", verify_pair(d))
    alg = build_duplicate(d)
    print("basis:", alg.basis_labels)
    print()

    # the same algebra two ways: direct table vs twisted product
    t = duplicate_to_twisting_map(d)
    prod = twisted_product(t)
    print("duplicate table == twisted-product table:",
          alg.table == prod.table and alg.unit == prod.unit)
    print()

    print("class split along the parameter line (a_u * a_v = 0 is the divide):")
    for au, av in ((0, -1), (-1, 0), (1, -2), (2, -3)):
        alg = build_duplicate(roundtrip_datum(QQ, au, av))
        print(f"  (a_u, a_v) = ({au:>2}, {av:>2}): a_u*a_v = {au * av:>2}"
              f" -> class {classify_4dim(alg)}")


if __name__ == "__main__":
    main()
