"""Solve and normalize B, C for every even signature and report the identities."""
import argparse

from cplxgeom.spinor_rep import build_gamma, cc_sign_formula, intertwiner_audit, intertwiners, majorana_basis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 4, 6, 8])
    args = ap.parse_args()
    for m in args.dims:
        for k in range(m + 1):
            rep = build_gamma(k, m - k)
            tw = intertwiners(rep)
            report = intertwiner_audit(rep, tw.B, tw.C)
            majorana = majorana_basis(rep, tw.C) is not None
            bad = [name for name, ok in report.checks if not ok]
            print(f"Cl({k},{m - k}): conj(C)C = {cc_sign_formula(k, m - k):+d} id, "
                  f"Majorana {'yes' if majorana else 'no '}, "
                  f"{'all identities hold' if not bad else 'FAILED: ' + ', '.join(bad)}")


if __name__ == "__main__":
    main()
