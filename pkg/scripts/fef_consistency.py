"""Direct maximization of the fully entangled fraction against (1+N)/4.

Runs over the Schmidt and Werner families, then over random states split by
the sign of det T. The closed form only tracks the direct optimum when
det T <= 0.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from qdis.geometry import decompose, fef_direct, profile
from qdis.states import random_mixed, schmidt, werner


@dataclass
class FefConfig:
    theta_points: int = 19
    p_points: int = 11
    random_states: int = 40
    seed: int = 0


def compare(rho) -> tuple[float, float, float]:
    direct = fef_direct(rho)
    formula = profile(rho).f
    return direct, formula, float(np.linalg.det(decompose(rho).T))


def run(cfg: FefConfig) -> None:
    worst = 0.0
    for theta in np.linspace(0, np.pi / 2, cfg.theta_points):
        d, f, _ = compare(schmidt(theta))
        worst = max(worst, abs(d - f))
    for p in np.linspace(0, 1, cfg.p_points):
        d, f, _ = compare(werner(p))
        worst = max(worst, abs(d - f))
    print(f"schmidt/werner families: max |direct - (1+N)/4| = {worst:.2e}")

    gaps = {"det T <= 0": [], "det T > 0": []}
    for k in range(cfg.random_states):
        d, f, det = compare(random_mixed(cfg.seed + k))
        gaps["det T <= 0" if det <= 0 else "det T > 0"].append(f - d)
    for key, g in gaps.items():
        if g:
            print(f"random, {key}: n={len(g)}, max formula - direct = {max(g):.3e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="fully entangled fraction cross-check")
    ap.add_argument("--random-states", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(FefConfig(random_states=a.random_states, seed=a.seed))
