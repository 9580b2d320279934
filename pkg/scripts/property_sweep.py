#!/usr/bin/env python3
"""Random property sweep over the interpolation machinery.

For each trial: draw a random multi-point problem, build the coefficient
matrix, run its structural selfcheck, push a random admissible parameter
through the linear-fractional map, verify the resulting function at the
predicted index, recover the parameter, and cross-check the denominator zero
count against the winding-number quadrature.  Prints worst-case defects.
"""

import argparse
import time

import numpy as np

from schurinterp import interp, sampling, schurclass
from schurinterp.interp import InterpProblem


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    start = time.monotonic()
    worst = {"junit": 0.0, "kernel": 0.0, "residue": 0.0, "verify": 0.0, "invert": 0.0}
    failures = 0

    for trial in range(args.trials):
        problem, ps = sampling.random_problem(rng)
        theta = interp.build_theta(ps)
        report = interp.theta_selfcheck(theta)
        worst["junit"] = max(worst["junit"], report.j_unitary_max)
        worst["kernel"] = max(worst["kernel"], report.kernel_identity_max)
        worst["residue"] = max(worst["residue"], report.residue_max)

        param = sampling.random_admissible_param(rng, theta, problem)
        res = interp.lft_apply(theta, param)
        kappa = ps.inertia.n_minus + param.B.degree
        verdict = interp.verify_solution(
            InterpProblem(nodes=problem.nodes, kappa=kappa), res.f
        )
        worst["verify"] = max(worst["verify"], *map(abs, verdict.residuals))
        if not verdict.passed:
            failures += 1
            print(f"trial {trial}: verification FAILED ({verdict.notes})")

        e_rec = interp.lft_invert(theta, res.f)
        e = param.as_ratfun()
        if e_rec.num.coeffs.shape == e.num.coeffs.shape:
            worst["invert"] = max(
                worst["invert"],
                float(np.max(np.abs(e_rec.num.coeffs - e.num.coeffs))),
                float(np.max(np.abs(e_rec.den.coeffs - e.den.coeffs))),
            )
        else:
            failures += 1
            print(f"trial {trial}: recovered parameter has the wrong shape")

        direct = schurclass.zeros_in_disk(res.V)
        winding = schurclass.winding_count(res.V)
        if not (direct == winding == kappa):
            failures += 1
            print(f"trial {trial}: zero count {direct}/{winding} != index {kappa}")

    elapsed = time.monotonic() - start
    print(f"\n{args.trials} trials in {elapsed:.2f}s, {failures} failures")
    print("worst J-unitarity defect: ", worst["junit"])
    print("worst kernel identity defect:", worst["kernel"])
    print("worst node residue:        ", worst["residue"])
    print("worst verification defect: ", worst["verify"])
    print("worst parameter recovery:  ", worst["invert"])
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
