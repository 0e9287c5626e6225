"""Sort the twisted products into the four isomorphism classes."""

from twistlab import (
    GF,
    QQ,
    REFERENCE_FINGERPRINTS,
    fingerprint,
    is_isomorphism,
    orbit_report,
    orbit_tsv,
    reference_isomorphism,
    standard_algebra,
)


def main() -> None:
    print("classification of the 4-dimensional twisted products")
    print()
    print("reference fingerprints (dim, commutative, center, radical, separable):")
    for label, fp in REFERENCE_FINGERPRINTS.items():
        print(f"  {label:>4}: {fp.to_doc()}")
    print()

    for field in (QQ, GF(3), GF(5), GF(13)):
        rep = orbit_report(field)
        print(f"over {rep.field_name}: {rep.class_counts}")
    print()

    print("full orbit table over Q:")
    print(orbit_tsv(orbit_report(QQ)))

    print("char 2 is outside the four-class table:")
    rep2 = orbit_report(GF(2))
    print(f"  {rep2.class_counts} ({rep2.note})")
    print()

    # spot-check the table with explicit isomorphisms
    m, src, tgt = reference_isomorphism("r_to_a_minus2", QQ)
    assert is_isomorphism(m, src, tgt)
    print("explicit check: the class-III product is the a_q algebra at q = -2")
    m, src, tgt = reference_isomorphism("aq_to_matrix", QQ, q=0)
    assert is_isomorphism(m, src, tgt)
    print("explicit check: a_0 is the 2x2 matrix algebra (so class IIa)")

    k4 = standard_algebra("k_n", QQ, n=4)
    print(f"sanity: k^4 fingerprint is the class-I one: "
          f"{fingerprint(k4) == REFERENCE_FINGERPRINTS['I']}")


if __name__ == "__main__":
    main()
