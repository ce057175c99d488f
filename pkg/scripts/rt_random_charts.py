"""Build optical charts from random polynomial L and check nullity, integrability, signature."""
import argparse
import random

from cplxgeom.optical import (
    RT_COORDS,
    CRData,
    chart_checks,
    integrability_check,
    null_plane_from_chart,
    random_L,
    rt_metric,
    signature_sweep,
)
from cplxgeom.xcalc import Poly, PolyForm


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--charts", type=int, default=20)
    ap.add_argument("--points", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    xi = PolyForm.d_coord(RT_COORDS, "r")
    for i in range(args.charts):
        data = CRData(random_L(rng))
        chart = rt_metric(data, Poly(RT_COORDS, 1), xi)
        null_ok = all(chart_checks(chart).values())
        integ = integrability_check(null_plane_from_chart(chart, data))
        sigs = signature_sweep(chart, args.points, seed=args.seed + i)
        lorentz = sum(s == (3, 1) for s in sigs)
        print(f"chart {i:2d}: null {null_ok}, integrable {integ}, (3,1) at {lorentz}/{len(sigs)} points"
              f"  L = {data.L.el.as_expr()}")


if __name__ == "__main__":
    main()
