#!/usr/bin/env python3
"""Plot a sweep TSV produced by `backbone sweep`.

One panel per metric: mean value vs target average degree, one line per
method, error bars at +/- one standard error over the seed repetitions.
Full-graph reference values are drawn as dashed horizontal lines. Cells
whose value is nan (skipped or failed runs) are dropped.

usage: plot_sweep.py sweep.tsv [-o out.png] [--metrics a,b,...] [--logy]
"""

import argparse
import csv
import math
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_sweep(path):
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="\t")
        header = None
        for rec in reader:
            if not rec or rec[0].startswith("#"):
                continue
            if header is None:
                header = rec
                if header[:5] != ["method", "degree", "seed", "metric", "value"]:
                    sys.exit(f"{path}: unexpected header {header!r}")
                continue
            method, degree, seed, metric, value = rec[:5]
            v = float(value)
            if math.isnan(v):
                continue  # skipped/failed cell; reason sits in the trailing column
            rows.append((method, float(degree), int(seed), metric, v))
    if header is None:
        sys.exit(f"{path}: no header row")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("tsv")
    ap.add_argument("-o", "--output", default=None, help="image path (default: <tsv>.png)")
    ap.add_argument("--metrics", default=None, help="comma-separated subset to plot")
    ap.add_argument("--logy", action="store_true", help="log-scale the value axis")
    args = ap.parse_args()

    rows = read_sweep(args.tsv)
    wanted = set(args.metrics.split(",")) if args.metrics else None

    # cells[(metric, method, degree)] -> list of per-seed values
    cells = defaultdict(list)
    reference = {}  # metric -> full-graph value
    for method, degree, seed, metric, v in rows:
        if wanted and metric not in wanted:
            continue
        if method == "full":
            reference[metric] = v
        else:
            cells[(metric, method, degree)].append(v)

    metrics = sorted({m for m, _, _ in cells} | set(reference))
    if not metrics:
        sys.exit("nothing to plot")
    methods = sorted({meth for _, meth, _ in cells})

    ncols = min(4, len(metrics))
    nrows = (len(metrics) + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(4.2 * ncols, 3.4 * nrows), squeeze=False)

    for idx, metric in enumerate(metrics):
        ax = axes[idx // ncols][idx % ncols]
        for method in methods:
            degrees = sorted(d for m, meth, d in cells if m == metric and meth == method)
            if not degrees:
                continue
            means, errs = [], []
            for d in degrees:
                vals = cells[(metric, method, d)]
                mu = sum(vals) / len(vals)
                means.append(mu)
                if len(vals) > 1:
                    var = sum((v - mu) ** 2 for v in vals) / (len(vals) - 1)
                    errs.append(math.sqrt(var / len(vals)))
                else:
                    errs.append(0.0)
            ax.errorbar(degrees, means, yerr=errs, marker="o", markersize=3,
                        capsize=2, label=method)
        if metric in reference:
            ax.axhline(reference[metric], linestyle="--", color="gray",
                       linewidth=1, label="full graph")
        if args.logy:
            ax.set_yscale("log")
        ax.set_title(metric, fontsize=10)
        ax.set_xlabel("target average degree")
        ax.grid(True, alpha=0.3)

    # one legend for the whole figure, taken from the first populated panel
    handles, labels = axes[0][0].get_legend_handles_labels()
    if handles:
        fig.legend(handles, labels, loc="lower center", ncol=len(labels), fontsize=9)
    for idx in range(len(metrics), nrows * ncols):
        axes[idx // ncols][idx % ncols].axis("off")

    fig.tight_layout(rect=(0, 0.06, 1, 1))
    out = args.output or args.tsv + ".png"
    fig.savefig(out, dpi=150)
    print(out)


if __name__ == "__main__":
    main()
