"""Refute the sum bound on Hochschild dimension of twisted products.

Both factors are k[Z2]: separable, so their own Hochschild cohomology
vanishes in positive degrees. The line-family map at alpha = 2 is
invertible, yet the twisted product has nonzero cohomology in every
degree. No bound in terms of the factors alone can hold.
"""

import json

from twistlab import QQ, verify_counterexample


def main() -> None:
    report = verify_counterexample(10, QQ)
    print(json.dumps(report, indent=2))
    print()
    print(f"verdict: {report['verdict']}")
    print(f"  factors separable:    {report['factor_a_separable']} / "
          f"{report['factor_b_separable']}")
    print(f"  twist invertible:     {report['twist_invertible']}")
    print(f"  HH dims (two routes): {report['rsz_dims']}")
    print(f"                        {report['bar_dims']} (bar, capped degree)")
    print(f"  refuted bound:        {report['refuted_bound']}")


if __name__ == "__main__":
    main()
