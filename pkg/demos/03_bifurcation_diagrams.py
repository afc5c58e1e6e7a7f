"""Branch diagrams on both sides of the critical half-width.

Below L* the upper branch is split by the gap (lam*, lam**) where the
descending part of the time map exits the admissible range above the level;
above L* the gap closes and both branches run unbroken to the fold at
lam_sup.  The same sweep is also written as the CLI's standalone SVG.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pullin import critical_set, sweep_diagram
from pullin.cli import emit_diagram_svg

fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), sharey=True)

for ax, L, n in zip(axes, (0.3, 0.6), (220, 160)):
    cs = critical_set(L)
    diagram = sweep_diagram(L, 0.02, 1.25 * cs.lambda_sup, n)

    lower = [(lam, a[0]) for lam, a in diagram.rows if len(a) > 0]
    upper = [(lam, a[1]) for lam, a in diagram.rows if len(a) > 1]
    ax.semilogx(*zip(*lower), ".", ms=3, color="#1f77b4", label="lower branch")
    if upper:
        ax.semilogx(*zip(*upper), ".", ms=3, color="#d62728", label="upper branch")

    ax.axvline(cs.lambda_sup, color="k", lw=0.7, ls=":")
    title = f"L = {L} ({cs.regime.lower()})"
    if cs.regime == "Split":
        ax.axvspan(cs.lambda_low, cs.lambda_mid, color="0.92")
        title += f", gap = ({cs.lambda_low:.3f}, {cs.lambda_mid:.3f})"
    ax.set_title(title, fontsize=10)
    ax.set_xlabel("lam")
    ax.legend(fontsize=8, loc="lower left")
    ax.grid(alpha=0.3, which="both")
    print(f"L = {L}: regime = {cs.regime}, lambda_sup = {cs.lambda_sup:.6f}")

axes[0].set_ylabel("midpoint deflection alpha")
fig.tight_layout()
fig.savefig("bifurcation_diagrams.png", dpi=130)
print("wrote bifurcation_diagrams.png")

# ======================================================================
# the CLI path renders the same rows without matplotlib
# ======================================================================
cs = critical_set(0.3)
emit_diagram_svg(sweep_diagram(0.3, 0.02, 1.25 * cs.lambda_sup, 160), "branch_diagram_L03.svg")
print("wrote branch_diagram_L03.svg")
