"""Plot the qubit illumination curves (gain, encoded discord, entanglement) at p0 = 1/2.

Reads a CSV written by ``qillum figure3`` or generates one in memory.

    python scripts/plot_figure3.py --out figure3.png
    qillum figure3 --out fig3.csv && python scripts/plot_figure3.py --csv fig3.csv
"""
import argparse
import csv
import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from qillum.cli import records_csv, sweep_records


def load(path):
    if path:
        with open(path, newline="", encoding="utf-8") as fh:
            text = fh.read()
    else:
        etas = [k / 200 for k in range(201)]
        text = records_csv(sweep_records([2], [0.5], etas, 1e-9))
    rows = list(csv.DictReader(io.StringIO(text)))
    return {k: [float(r[k]) for r in rows] for k in rows[0]}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--csv", help="figure3 CSV; generated if omitted")
    ap.add_argument("--out", default="figure3.png")
    args = ap.parse_args()
    data = load(args.csv)
    eta = data["eta"]

    fig, (ax_a, ax_b) = plt.subplots(1, 2, figsize=(10, 4))
    ax_a.plot(eta, data["i_q"], label="quantum illumination")
    ax_a.plot(eta, data["i_c_max"], label="best conventional")
    ax_a.plot(eta, data["delta_i"], label="gain")
    ax_a.plot(eta, data["discord_enc"], "k:", label="encoded discord")
    ax_a.set_xlabel("eta")
    ax_a.set_ylabel("bits")
    ax_a.legend()

    ax_b.plot(eta, data["discord"], label="discord")
    ax_b.plot(eta, data["eof"], label="entanglement of formation")
    ax_b.axvline(1 / 3, color="grey", lw=0.5)
    ax_b.set_xlabel("eta")
    ax_b.legend()

    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
