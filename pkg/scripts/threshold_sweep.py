"""Sweep eta1 x eta2 x theta and compare numerical PPT with eta1*eta2 <= 1/3.

    python scripts/threshold_sweep.py --eta-steps 50 --theta-steps 91 --out sweep.csv
"""

import argparse
import csv
import time
from dataclasses import dataclass

from qdis.channels import SweepRow, count_disagreements, threshold_sweep


@dataclass
class SweepConfig:
    eta_steps: int = 50
    theta_steps: int = 91
    out: str | None = None


def run(cfg: SweepConfig) -> int:
    t0 = time.perf_counter()
    rows = threshold_sweep(cfg.eta_steps, cfg.theta_steps)
    dt = time.perf_counter() - t0
    bad = count_disagreements(rows)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(SweepRow.HEADER)
            for r in rows:
                w.writerow([r.eta1, r.eta2, r.product, r.worst_margin, r.ppt_all_theta, r.threshold_predict, r.agree])
    entangled = sum(not r.ppt_all_theta for r in rows)
    print(f"{len(rows)} grid points in {dt:.1f}s")
    print(f"entangled for some theta: {entangled}, separable for all theta: {len(rows) - entangled}")
    print(f"disagreements outside band: {bad}")
    return bad


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eta-steps", type=int, default=50)
    ap.add_argument("--theta-steps", type=int, default=91)
    ap.add_argument("--out")
    a = ap.parse_args()
    raise SystemExit(1 if run(SweepConfig(a.eta_steps, a.theta_steps, a.out)) else 0)
