"""Monte-Carlo accuracy of the LP copula estimator.

For each reference family the harness draws B samples, fits the BIC-denoised
LP copula and averages |fitted - true density| over a 50 x 50 lattice.  The
error shrinks as n grows.  Seeds are derived per replication, so parallel and
serial runs agree exactly.  Pass --quick for a smaller run.
"""

import sys

from lpcopula import BenchConfig, run_miae, run_timing
from lpcopula.reference import BENCH_FAMILIES

B = 10 if "--quick" in sys.argv else 50
print("%-20s %10s %10s" % ("family", "n=250", "n=1000"))
for label, fam in BENCH_FAMILIES:
    row = [run_miae(BenchConfig(fam, n=n, B=B, L=50, m=4)).miae_mean for n in (250, 1000)]
    print("%-20s %10.4f %10.4f" % (label, *row))

print("\nmedian seconds per fit")
for n, s in run_timing([500, 2000, 10000]):
    print("  n = %-6d %.5f" % (n, s))
