import csv
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "response.csv"
with open(path) as fh:
    reader = csv.reader(fh)
    header = next(reader)
    data = [[float(v) for v in row] for row in reader]
t = [row[0] for row in data]
cols = header[1:]
per_agent = {}
for j, name in enumerate(cols, start=1):
    per_agent.setdefault(name.split("_")[0], []).append(j)
fig, axes = plt.subplots(len(per_agent), 1, sharex=True, figsize=(7, 1.6 * len(per_agent) + 1))
if len(per_agent) == 1:
    axes = [axes]
for ax, (agent, idx) in zip(axes, per_agent.items()):
    for j in idx:
        ax.plot(t, [row[j] for row in data], lw=0.8)
    ax.axhline(0.0, ls=":", color="k")
    ax.set_ylabel(agent)
axes[-1].set_xlabel("t")
fig.tight_layout()
fig.savefig(path.rsplit(".", 1)[0] + ".png", dpi=120)
