"""Figure rendering for the CLI report paths (headless Agg backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def spectrum_figure(rows, path) -> None:
    """Norm series per source: ln||phi_n||^2, ln||Psi_n||^2 and their sum."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    sources = sorted({r["source"] for r in rows})
    styles = {"closed_form": "-", "oracle": "--"}
    for src in sources:
        sub = [r for r in rows if r["source"] == src]
        ns = [r["n"] for r in sub]
        ls = styles.get(src, ":")
        ax.plot(ns, [r["log_norm_phi_sq"] for r in sub], ls,
                label=f"ln ||phi_n||^2 ({src})")
        ax.plot(ns, [r["log_norm_psi_sq"] for r in sub], ls,
                label=f"ln ||Psi_n||^2 ({src})")
        ax.plot(ns, [r["log_product"] for r in sub], ls, alpha=0.6,
                label=f"ln product ({src})")
    ax.set_xlabel("n")
    ax.set_ylabel("natural log")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def quasi_figure(checks, path) -> None:
    """Partial-sum error |S_N - <f,g>| against N for each ordering."""
    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    for check in checks:
        errs = [abs(s - check.target) for s in check.partial_sums]
        ax.semilogy(range(len(errs)), errs, label=check.ordering)
    ax.axhline(checks[0].tolerance, color="k", lw=0.8, ls=":",
               label="tolerance")
    ax.set_xlabel("N")
    ax.set_ylabel("|S_N - <f,g>|")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def sweep_figure(rows, path) -> None:
    """Growth bases along the sweep coordinate, with the bounded line at 1."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    coords = [r["coordinate"] for r in rows]
    xs = [r["x"] for r in rows]
    ys = [r["y"] for r in rows]
    ax.plot(coords, xs, "o-", ms=3, label="x (phi growth base)")
    ax.plot(coords, ys, "s-", ms=3, label="y (Psi growth base)")
    ax.axhline(1.0, color="k", lw=0.8, ls=":")
    ax.set_xlabel(rows[0].get("coordinate_name", "grid point"))
    ax.set_ylabel("growth base")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
