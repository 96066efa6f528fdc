"""Symmetric powers under counting: the Galkin-Shinder identity and the
adequacy of the Sigma_n-action on X^n.

Run: python demos/symmetric_powers.py
"""
from equiquot.groups import centralizer_report, partitions
from equiquot.zeta import sigma_n_adequacy, verify_gs_identity


def main():
    print("prod_i (1 - t^i)^(-x) against the partition formula and brute force")
    for x in range(4):
        proof = verify_gs_identity(x, 6, brute_max=4)
        print(f"  x = {x}: {proof.data['product']}  (brute force up to t^{len(proof.data['brute_force']) - 1})")

    print("\nstabilizer sequences N -> N x| H -> H inside S_n")
    for n in range(6):
        r = sigma_n_adequacy(n)
        print(f"  S_{n}: {len(r['partitions'])} partitions, all in S0: {r['all_pass']}")

    print("\ncentralizers of the block-cyclic elements, n = 4")
    for p in partitions(4):
        proof = centralizer_report(p)
        d = proof.data
        shape = "<g> x H" if proof.passed else "A x| H only"
        print(f"  {d['partition']}: |Z| = {d['Z']}, |<g>| = {d['cyclic']}, |H| = {d['H']}, |A| = {d['A']}  -> {shape}")


if __name__ == "__main__":
    main()
