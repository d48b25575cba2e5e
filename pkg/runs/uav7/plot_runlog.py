import csv
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "runlog.csv"
with open(path) as fh:
    rows = list(csv.DictReader(fh))
it = [int(r["iter"]) for r in rows]
agents = sorted((k for k in rows[0] if k.startswith("J_")), key=lambda k: int(k[2:]))
fig, (ax1, ax2) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
for k in agents:
    ax1.plot(it, [float(r[k]) for r in rows], label=k.replace("J_", "agent "))
ax1.set_ylabel("objective")
ax1.legend(fontsize=8)
ax2.semilogy(it, [float(r["r_p_max"]) for r in rows], label="primal")
ax2.semilogy(it, [float(r["r_d"]) + 1e-16 for r in rows], label="dual")
ax2.set_xlabel("iteration")
ax2.set_ylabel("relative residual")
ax2.legend()
fig.tight_layout()
fig.savefig(path.rsplit(".", 1)[0] + ".png", dpi=120)
