"""Figure rendering for landscape and report commands.

All rendering uses the Agg backend and writes PNG files; the data always
lives in the CSV/JSON outputs, and every figure can be suppressed with the
command-line --no-plot flag. Figures are a viewing convenience on top of
the delimited data, never the source of record.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (requires backend selection first)

from .circle import LandscapeSample

__all__ = ["save_landscape_figure", "save_report_figure"]

_BACKGROUND_POINT_CAP = 60_000


def save_landscape_figure(
    samples: list[LandscapeSample],
    refined: list[bool],
    overlay: list,
    t: float,
    path: str,
) -> None:
    """Two-panel cusp landscape figure.

    Left: ln(|F(t-i theta)|^2/F(t)^2) against theta/2pi, colored by cos(phi),
    with black dots at the cos(phi) > 0.99 samples. Right: the Farey overlay
    (p/q, -4 ln q). The left x-axis covers (0, 1/2] (conjugate symmetry);
    the right covers [0, 1]."""
    m = len(samples)
    stride = max(1, m // _BACKGROUND_POINT_CAP)
    xs = [s.theta / (2 * math.pi) for s in samples[::stride]]
    ys = [s.log_norm_sq for s in samples[::stride]]
    cs = [s.cos_phi for s in samples[::stride]]
    dot_x = [s.theta / (2 * math.pi) for s in samples if s.is_peak]
    dot_y = [s.log_norm_sq for s in samples if s.is_peak]
    ref_x = [s.theta / (2 * math.pi) for s, r in zip(samples, refined) if r]
    ref_y = [s.log_norm_sq for s, r in zip(samples, refined) if r]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(12.5, 5.0), width_ratios=[5, 4])
    sc = ax1.scatter(xs, ys, c=cs, cmap="viridis", s=0.4, vmin=-1.0, vmax=1.0,
                     rasterized=True)
    ax1.scatter(dot_x, dot_y, c="black", s=5.0, zorder=3, label="cos(phi) > 0.99")
    ax1.scatter(ref_x, ref_y, facecolors="none", edgecolors="red", s=40.0, zorder=4,
                linewidths=0.8, label="refined peak")
    fig.colorbar(sc, ax=ax1, label="cos(phi)")
    ax1.set_xlabel("theta / 2pi")
    ax1.set_ylabel("ln(|F(t - i theta)|^2 / F(t)^2)")
    ax1.set_title(f"cusp landscape at t = {t:g}")
    ax1.legend(loc="lower right", fontsize=8)

    ax2.scatter([f.p / f.q for (f, _) in overlay], [h for (_, h) in overlay],
                c="black", s=2.0)
    ax2.set_xlabel("p/q")
    ax2.set_ylabel("-4 ln q")
    ax2.set_title("Farey overlay")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def save_report_figure(kind: str, header: list[str], rows: list[list], path: str) -> None:
    """One line/scatter panel per report kind, x = first column."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    cols = {name: [row[i] for row in rows] for i, name in enumerate(header)}
    if kind == "rho":
        ax.plot(cols["n"], cols["rho"], marker="o")
        ax.axhline(1.0, color="gray", linestyle="--", linewidth=0.8)
        ax.set_xscale("log")
        ax.set_xlabel("n")
        ax.set_ylabel("rho(n,k)")
    elif kind == "liminf":
        ax.plot(cols["m"], cols["ratio"], marker="o")
        if "bound" in cols and rows:
            ax.axhline(cols["bound"][0], color="gray", linestyle="--", linewidth=0.8)
        ax.set_xlabel("m  (n = (p_m#)^r)")
        ax.set_ylabel("divisor ratio")
    elif kind == "convergence":
        ax.plot(cols["n"], cols["ratio"], marker="o")
        ax.axhline(1.0, color="gray", linestyle="--", linewidth=0.8)
        ax.set_xscale("log")
        ax.set_xlabel("n")
        ax.set_ylabel("exact / predicted")
    elif kind == "logconcavity":
        ax.scatter(cols["n"], [float(r) for r in cols["a_ratio"]], s=3.0)
        ax.axhline(1.0, color="gray", linestyle="--", linewidth=0.8)
        ax.set_yscale("log")
        ax.set_xlabel("n")
        ax.set_ylabel("A(n,k)^2 / (A(n,k-1) A(n,k+1))")
    elif kind == "ansatz":
        ax.plot(cols["n"], cols["ansatz_over_alpha"], marker="o")
        ax.axhline(1.0, color="gray", linestyle="--", linewidth=0.8)
        ax.set_xlabel("n")
        ax.set_ylabel("ansatz / alpha")
    else:
        plt.close(fig)
        raise ValueError(f"no figure defined for report kind {kind!r}")
    ax.set_title(f"report: {kind}")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
