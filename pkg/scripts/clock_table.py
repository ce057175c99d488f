"""Print Cl(k, l) types for k + l <= 8 next to both independent oracles."""
import argparse

from cplxgeom.clock import classify, even_subalgebra, hour
from cplxgeom.clock_oracle import recursion_type, trace_form_type


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", type=int, default=8)
    args = ap.parse_args()
    print(f"{'k':>2} {'l':>2}  hour  {'type':8} {'even':8} {'trace':8} recursion")
    mismatches = 0
    for m in range(args.max_dim + 1):
        for k in range(m + 1):
            l = m - k
            t, tr, rec = classify(k, l), trace_form_type(k, l), recursion_type(k, l)
            ev = str(even_subalgebra(k, l)) if m else "-"
            mismatches += t != tr or (rec is not None and rec != t)
            print(f"{k:>2} {l:>2}  {hour(k, l):>4}  {str(t):8} {ev:8} {str(tr):8} {rec or '-'}")
    print(f"mismatches: {mismatches}")


if __name__ == "__main__":
    main()
