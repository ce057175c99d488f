"""Random on-shell superpositions: reality, conjugation invariance and conservation of the current."""
import argparse
import random

from cplxgeom.dirac import (
    conjugate_wave,
    current_field,
    divergence_exact,
    divergence_numeric,
    lorentzian_rep,
    random_wavefunction,
)
from cplxgeom.spinor_rep import intertwiners


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4])
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--waves", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for n in args.n:
        rep = lorentzian_rep(n)
        tw = intertwiners(rep)
        real = invariant = conserved = 0
        worst = 0.0
        for s in range(args.samples):
            psi = random_wavefunction(rng, rep, waves=args.waves)
            j = current_field(psi, rep, tw)
            jc = current_field(conjugate_wave(psi, tw), rep, tw)
            real += all(c.is_real() for c in j)
            invariant += all(a.terms == b.terms for a, b in zip(j, jc))
            conserved += divergence_exact(psi, rep, tw).is_zero()
            worst = max(worst, divergence_numeric(psi, rep, tw, seed=s))
        print(f"Cl({2 * n - 1},1): real {real}/{args.samples}, j(psi_c) = j(psi) {invariant}/{args.samples}, "
              f"div j = 0 {conserved}/{args.samples}, worst numeric divergence {worst:.2e}")


if __name__ == "__main__":
    main()
