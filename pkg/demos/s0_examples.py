"""Which extensions lie in S0?  Condition (ii) is the exact-cover search for
an extension of the sum of Irr(N); condition (iii) compares stabilizer
multisets of H on classes and on characters.

Run: python demos/s0_examples.py
"""
from equiquot.adequacy import in_s0, is_s0_adequate
from equiquot.presets import resolve_gset, resolve_sequence

SEQUENCES = ["abelian:2", "c3c2", "s3ext", "wreath:cyclic:2:2", "wreath:cyclic:3:2",
             "heisenberg:2", "heisenberg:3", "a4cover", "exS0:2"]


def main():
    print(f"{'sequence':<20} {'|N|':>4} {'|G|':>4} {'(ii)':>6} {'(iii)':>6} {'S0':>6}")
    for ref in SEQUENCES:
        r = in_s0(resolve_sequence(ref))
        o = r.orders
        print(f"{ref:<20} {o['N']:>4} {o['G']:>4} {str(r.cond_ii):>6} {str(r.cond_iii.holds):>6} {str(r.in_s0):>6}")

    c3 = in_s0(resolve_sequence("exS0:2")).cond_iii
    print("\nexS0(2): H-stabilizers by index in H")
    print("  on classes (points):     ", c3.by_index("classes", "points"))
    print("  on characters (orbits):  ", c3.by_index("characters", "orbits"))

    for ref in ("power:abc:3", "through:heisenberg:2"):
        a = is_s0_adequate(resolve_gset(ref))
        print(f"\n{ref}: adequate = {a.adequate}\n  {a.theorem_a_conclusion}")


if __name__ == "__main__":
    main()
