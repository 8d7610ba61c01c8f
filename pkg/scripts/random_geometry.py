"""Sample random two-qubit states and place them in the correlation tetrahedron.

Prints how many land in each region, the largest N among PPT-separable
samples, and the largest Ic seen.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

import numpy as np

from qdis.geometry import characteristic_vector, decompose, profile, tetrahedron_weights
from qdis.separability import ppt_verdict
from qdis.states import random_mixed, random_product, random_pure

MAKERS = {"pure": random_pure, "mixed": random_mixed, "product": random_product}


@dataclass
class GeometryConfig:
    samples: int = 3000
    kinds: tuple[str, ...] = ("pure", "mixed", "product")


def run(cfg: GeometryConfig) -> None:
    regions = Counter()
    verdicts = Counter()
    min_weight, max_sep_n, max_ic = np.inf, 0.0, 0.0
    for seed in range(cfg.samples):
        kind = cfg.kinds[seed % len(cfg.kinds)]
        rho = MAKERS[kind](seed)
        prof = profile(rho)
        ver = ppt_verdict(rho)
        regions[prof.region.value] += 1
        verdicts[ver.verdict.value] += 1
        min_weight = min(min_weight, float(np.min(tetrahedron_weights(characteristic_vector(decompose(rho).T)))))
        max_ic = max(max_ic, prof.Ic)
        if ver.separable:
            max_sep_n = max(max_sep_n, prof.N)
    print(f"samples: {cfg.samples} ({', '.join(cfg.kinds)})")
    print(f"regions: {dict(regions)}")
    print(f"PPT verdicts: {dict(verdicts)}")
    print(f"smallest tetrahedron weight: {min_weight:.3e}")
    print(f"largest N among separable samples: {max_sep_n:.6f}")
    print(f"largest Ic: {max_ic:.6f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description="random-state geometry survey")
    ap.add_argument("--samples", type=int, default=3000)
    ap.add_argument("--kinds", nargs="+", default=list(MAKERS), choices=list(MAKERS))
    a = ap.parse_args()
    run(GeometryConfig(a.samples, tuple(a.kinds)))
