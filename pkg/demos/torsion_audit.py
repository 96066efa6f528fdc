"""The torsion audit for Enriques surface x curve of genus g.

The odd cohomology of the base has torsion of order 2^(2g+2).  A Severi-
Brauer fibration of index d = 2 gives a Leray page with d rows; a d3 that is
non-zero on a Z/2 summand cuts the odd torsion below d times that of the base.

Run: python demos/torsion_audit.py
"""
from equiquot.torsion import GradedGroup, IntMatrix, audit_theorem_c, load_fixture


def main():
    for g in (1, 2):
        B = GradedGroup.from_json(load_fixture(f"enriques_x_curve_g{g}"))
        print(f"genus {g}: H^odd(B) = {B.odd()!r}")
        for kind in ("d3", "d3_zero"):
            d3 = IntMatrix.from_json(load_fixture(f"{kind}_enriques_x_curve_g{g}"))
            r = audit_theorem_c(B, 2, d3)
            print(f"  {kind:<8} E2 odd {r['tau_E2_odd']:>6}  E4 odd {str(r.get('tau_E4_odd')):>6}  "
                  f"d*tau(B) {r['d_times_tau_H_odd_B']:>6}  -> {r['status']}")


if __name__ == "__main__":
    main()
