"""Figure rendering for the plot-data path (headless matplotlib)."""

from __future__ import annotations

__all__ = ["render_coefficient_figure"]


def render_coefficient_figure(path, thetas, columns, two_j: int) -> None:
    """Plot sampled coefficient curves and write the figure to ``path``.

    ``columns`` maps each coefficient index k to its sampled values on
    the ``thetas`` grid.  The output format follows the file suffix.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for k in sorted(columns):
        ax.plot(thetas, columns[k], label=f"k={k}", linewidth=1.2)
    ax.set_xlabel(r"$\theta$ (rad)")
    ax.set_ylabel("coefficient value")
    ax.set_title(f"rotation polynomial coefficients, 2j={two_j}")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
