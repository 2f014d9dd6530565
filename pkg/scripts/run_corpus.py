#!/usr/bin/env python3
"""Survey the bundled corpus: for every (fan, endomorphism) pair print the
degree, the int-amplified verdict with certificate, the contracting exponent,
the rank bookkeeping, and the verified decomposition of the structure sheaf
and of the first ray divisor."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from toricpush import (IntMatrix, build_endo, class_group,
                       contracting_exponent, cox_ring, decompose_pushforward,
                       degree, hirzebruch, induced_cox_endo, is_int_amplified,
                       multiplication_endo, product_fan, projective_space,
                       rank_bookkeeping, verify_decomposition)


def corpus():
    p1 = projective_space(1)
    fans = [p1, projective_space(2), projective_space(3),
            product_fan(p1, p1, name="P1xP1"),
            hirzebruch(1), hirzebruch(2), hirzebruch(3)]
    pairs = []
    for fan in fans:
        for q in (2, 3):
            pairs.append((fan, "mul:%d" % q, multiplication_endo(fan, q)))
    pp = fans[3]
    pairs.append((pp, "swap", build_endo(pp, IntMatrix.from_rows([[0, 1],
                                                                  [2, 0]]))))
    return pairs


def fmt_class(c):
    return "(" + ",".join(map(str, c)) + ")"


def survey(box):
    for fan, endo_name, endo in corpus():
        pic = class_group(fan)
        yes, cert = is_int_amplified(endo, pic)
        phi = induced_cox_endo(endo, cox_ring(fan))
        numbers = rank_bookkeeping(endo, cox_ring(fan), pic)
        print("== %s / %s" % (fan.name, endo_name))
        print("   degree %d, Pic rank %d, prod(c) = %d = %d x %d"
              % (degree(endo), pic.rank,
                 numbers["product_of_multiplicities"], numbers["degree"],
                 numbers["pic_index"]))
        print("   int-amplified: %s%s"
              % ("yes" if yes else "no",
                 ", H=%s" % fmt_class(cert) if yes else ""))
        print("   contracting exponent: %s" % contracting_exponent(phi))
        for label, coeffs in (("O", (0,) * fan.nrays),
                              ("D_0", tuple(1 if i == 0 else 0
                                            for i in range(fan.nrays)))):
            dec = decompose_pushforward(endo, coeffs)
            rep = verify_decomposition(endo, coeffs, dec, box=box)
            print("   f_* %-4s = %s   [%s, %d checks]"
                  % (label,
                     " + ".join(fmt_class(s) for s in dec.summands),
                     "verified" if rep.passed else "FAILED", rep.checks))
            if not rep.passed:
                for v in rep.violations:
                    print("      !! %s" % v)
                sys.exit(1)
        print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--box", type=int, default=2,
                        help="Pic-coordinate twist box for verification")
    survey(parser.parse_args().box)


if __name__ == "__main__":
    main()
