"""Time map curves over the admissible deflection range.

For each forcing strength the curve rises from zero to a single interior
maximum and falls back to the endpoint value; every horizontal level L cuts
it in 0, 1, or 2 points, which is the whole solution-count story.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pullin import alpha_limit, g_closed, max_time_map, sample_time_map

# ======================================================================
# sweep a handful of forcing strengths
# ======================================================================
LAMBDAS = (0.3, 0.6, 1.0, 2.0, 4.0)

fig, (ax_t, ax_d) = plt.subplots(1, 2, figsize=(11, 4.5))

for lam in LAMBDAS:
    a_lim = alpha_limit(lam)
    alphas = np.linspace(0.01 * a_lim, a_lim, 160)
    ts = [sample_time_map(float(a), lam, with_derivs=False).T for a in alphas]
    (line,) = ax_t.plot(alphas, ts, label=f"lam = {lam:g}")
    a_star, m = max_time_map(lam)
    ax_t.plot([a_star], [m], "o", ms=4, color=line.get_color())
    ax_t.plot([a_lim], [g_closed(lam)], "s", ms=4, color=line.get_color())

ax_t.set_xlabel("midpoint deflection alpha")
ax_t.set_ylabel("half-width T(alpha; lam)")
ax_t.set_title("time map, interior max (dot) and endpoint value (square)")
ax_t.legend(fontsize=8)
ax_t.grid(alpha=0.3)

# ======================================================================
# derivatives at lam = 1: strict concavity means one interior max
# ======================================================================
lam = 1.0
a_lim = alpha_limit(lam)
alphas = np.linspace(0.02 * a_lim, 0.999 * a_lim, 140)
samples = [sample_time_map(float(a), lam) for a in alphas]
ax_d.plot(alphas, [s.T_prime for s in samples], label="T'")
ax_d.plot(alphas, [s.T_second for s in samples], label="T''")
ax_d.axhline(0.0, color="k", lw=0.6)
ax_d.set_xlabel("midpoint deflection alpha")
ax_d.set_title("derivatives at lam = 1: T'' < 0 throughout")
ax_d.legend()
ax_d.grid(alpha=0.3)

fig.tight_layout()
fig.savefig("time_map_curves.png", dpi=130)
print("wrote time_map_curves.png")
for lam in LAMBDAS:
    a_star, m = max_time_map(lam)
    print(f"lam = {lam:4g}: argmax = {a_star:.6f}, M = {m:.6f}, g = {g_closed(lam):.6f}")
