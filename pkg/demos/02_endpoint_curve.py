"""The endpoint curve g and its peak, the critical half-width L*.

g(lam) is the time map evaluated at the largest admissible deflection.
Levels below its peak cut the curve twice; those two abscissas delimit the
gap in the upper solution branch.  Levels above the peak miss the curve and
the branch stays in one piece, which is the regime change at L = L*.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pullin import compute_L_star, g_closed, g_prime, lambda_fold_pair

c, l_star = compute_L_star(1e-10)
print(f"peak of g: c = {c:.10f}, L* = {l_star:.10f}")

grid = np.geomspace(0.02, 50.0, 400)
g_vals = [g_closed(float(x)) for x in grid]
dg_vals = [g_prime(float(x)) for x in grid]

fig, (ax_g, ax_p) = plt.subplots(1, 2, figsize=(11, 4.5))

ax_g.semilogx(grid, g_vals, lw=1.6)
ax_g.plot([c], [l_star], "ko", ms=5)
ax_g.annotate(f"  (c, L*) = ({c:.4f}, {l_star:.4f})", (c, l_star), fontsize=9)

# ----------------------------------------------------------------------
# a level below the peak crosses twice: the fold pair of that half-width
# ----------------------------------------------------------------------
L = 0.3
low, mid = lambda_fold_pair(L)
ax_g.axhline(L, color="tab:red", lw=0.9, ls="--")
ax_g.plot([low, mid], [L, L], "rv", ms=6)
ax_g.annotate(f"lam* = {low:.4f}", (low, L), textcoords="offset points",
              xytext=(-10, -14), fontsize=8, color="tab:red")
ax_g.annotate(f"lam** = {mid:.4f}", (mid, L), textcoords="offset points",
              xytext=(-10, -14), fontsize=8, color="tab:red")
ax_g.set_xlabel("lam")
ax_g.set_ylabel("g(lam)")
ax_g.set_title("endpoint curve with the level L = 0.3")
ax_g.grid(alpha=0.3, which="both")

ax_p.semilogx(grid, dg_vals, lw=1.6)
ax_p.axhline(0.0, color="k", lw=0.6)
ax_p.axvline(c, color="k", lw=0.6, ls=":")
ax_p.plot([1.0], [-1.0 / 15.0], "ko", ms=5)
ax_p.annotate("  g'(1) = -1/15", (1.0, -1.0 / 15.0), fontsize=9)
ax_p.set_xlabel("lam")
ax_p.set_ylabel("g'(lam)")
ax_p.set_title("derivative: one sign change, at the peak")
ax_p.grid(alpha=0.3, which="both")

fig.tight_layout()
fig.savefig("endpoint_curve.png", dpi=130)
print(f"fold pair at L = {L}: ({low:.6f}, {mid:.6f})")
print("wrote endpoint_curve.png")
