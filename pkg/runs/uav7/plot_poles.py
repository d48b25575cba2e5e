import csv
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "poles.csv"
with open(path) as fh:
    rows = list(csv.DictReader(fh))
fig, ax = plt.subplots(figsize=(6, 5))
for source, marker in (("sample", "."), ("vertex", "x"), ("nominal", "o")):
    pts = [(float(r["re"]), float(r["im"])) for r in rows if r["source"] == source]
    if pts:
        ax.scatter(*zip(*pts), marker=marker, s=12, label=source)
ax.axvline(0.0, color="k", lw=0.8)
ax.set_xlabel("Re")
ax.set_ylabel("Im")
ax.legend()
fig.tight_layout()
fig.savefig(path.rsplit(".", 1)[0] + ".png", dpi=120)
