"""Evaluating registry entries one at a time.

Walks through a few representative checks: a plain norm inequality, an
equality with a closed form, a parametrized bound, and the two-variant
entries whose printed form fails on a fixed witness while the corrected
form holds.
"""

import numpy as np

from pnumrad.ensembles import EnsembleSpec, derive_seed, sample
from pnumrad.inequalities import check, list_registry, witness_matrix


def show(rec, note=""):
    label = rec.id + (f"[{rec.variant}]" if rec.variant else "")
    print(f"  {label:26s} verdict={rec.verdict:18s} "
          f"slack={rec.slack:+.3e} equality={rec.equality_attained}"
          + (f"  {note}" if note else ""))


def main():
    seed = derive_seed("demo", "checks")
    g = sample(EnsembleSpec("ginibre", 4, seed))
    h = sample(EnsembleSpec("hermitian", 4, derive_seed(seed, 1)))
    nil = sample(EnsembleSpec("square_zero", 4, derive_seed(seed, 2)))

    print("The registry knows", len(list_registry()), "entries. A few of "
          "them on 4x4 draws:")
    show(check("SCH-MONO", [g], 1.5), "norms shrink as p grows")
    show(check("WP-SA", [h], 2), "self-adjoint: radius equals norm")
    show(check("W2-EXACT", [g], 2), "closed form at p = 2")
    show(check("W2-SQZERO", [nil], 2), "square-zero radius formula")
    show(check("THM1", [g], 2, {"t": 0.5}), "transform radius bound, t = 0.5")
    show(check("HEINZ", [sample(EnsembleSpec("positive", 4, derive_seed(seed, 3))),
                         g,
                         sample(EnsembleSpec("positive", 4, derive_seed(seed, 4)))],
               2, {"nu": 0.5}), "three-operand interpolation bound")

    print("\nEquality cases certify as holds only when the relation is an "
          "equality; a one-sided bound that is exactly tight lands "
          "indeterminate, because no interval can prove strictness:")
    j2 = witness_matrix("J2")
    show(check("THM1", [j2], 2, {"t": 0.5}), "tight on the 2x2 shift")

    print("\nTwo-variant entries: the as_printed reading fails on a fixed "
          "witness, the as_derived correction holds on the same operands.")
    i2 = witness_matrix("I2")
    for cid in ("REM-POSREF", "EQ-MAXPM", "REM-MAXPM-INF"):
        printed = check(cid, [i2, i2], "inf", {"variant": "as_printed"})
        derived = check(cid, [i2, i2], "inf", {"variant": "as_derived"})
        show(printed)
        show(derived)
    rec = check("REM-POSREF", [i2, i2], "inf", {"variant": "as_printed"})
    print(f"\n  REM-POSREF printed reading at T = S = I: left side "
          f"{rec.lhs_mid:.3f}, right side {rec.rhs_mid:.3f}")


if __name__ == "__main__":
    main()
