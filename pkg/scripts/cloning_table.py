"""Print reduction factors of the symmetric cloners with exact fractions."""

import argparse

from qdis.cloning import CloningMode, cloning_table, min_copies

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=8)
    a = ap.parse_args()
    for row in cloning_table(a.max_m):
        mark = "<= 1/3" if row.meets_threshold else ""
        print(f"{row.mode.value:16s} M={row.M:<3d} eta={str(row.eta):8s} net={str(row.net_shrink):8s} {mark}")
    for mode in CloningMode:
        print(f"min copies, {mode.value}: {min_copies(mode)}")
