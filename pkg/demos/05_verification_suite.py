"""Run the self-verification registry, then cross-examine the classifier.

The registry prints one line per check.  The second half pits the cached
classifier against a quadrature-free brute-force scan on a fresh grid of
forcing strengths, the same instrument the registry uses but on more
points, as an independent read of the count boundaries.
"""
import numpy as np

from pullin import count_solutions, critical_set
from pullin.acceptance import _brute_count, run_all

print("=" * 64)
print("verification registry")
print("=" * 64)
ok = run_all()
print(f"overall: {'PASS' if ok else 'FAIL'}")

print()
print("=" * 64)
print("classifier vs brute-force scan, L = 0.3")
print("=" * 64)
cs = critical_set(0.3)
print(
    f"critical abscissas: lam* = {cs.lambda_low:.6f}, "
    f"lam** = {cs.lambda_mid:.6f}, lam_sup = {cs.lambda_sup:.6f}"
)
mismatches = 0
for lam in np.geomspace(0.05, 3.0, 28):
    lam = float(lam)
    counted = count_solutions(lam, 0.3)
    scanned = _brute_count(lam, 0.3)
    tag = "" if counted == scanned else "   <-- disagreement"
    if counted != scanned:
        mismatches += 1
    print(f"lam = {lam:8.5f}: classifier {counted}, scan {scanned}{tag}")
print(f"{mismatches} disagreements on 28 probes")
