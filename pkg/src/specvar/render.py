"""Rendering of localization geometry (SVG, PNG) and figure plots.

SVG coordinate transform: the unit disk maps onto a 1000 x 1000 viewBox via

    x_px = 500 * (1 + Re z),   y_px = 500 * (1 - Im z),

so the unit circle is the inscribed circle of the canvas. Euclidean-bound
disks are drawn blue, hyperbolic-bound disks red; vacuous disks are dashed.
PNG twins are rendered with matplotlib using the same semantics.
"""

from __future__ import annotations

from .harness import FigureData, LocalizationData

_BLUE = "#1f77b4"
_RED = "#d62728"
_CROSS_PX = 9.0

_MODE_COLOR = {"euclid": _BLUE, "hyper": _RED}


def _px(z: complex) -> tuple[float, float]:
    return 500.0 * (1.0 + z.real), 500.0 * (1.0 - z.imag)


def localization_svg(data: LocalizationData) -> str:
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">',
        "<!-- unit disk: x_px = 500(1 + Re z), y_px = 500(1 - Im z) -->",
        '<rect width="1000" height="1000" fill="white"/>',
        '<circle cx="500" cy="500" r="500" fill="none" stroke="#999" stroke-width="1.5"/>',
    ]
    for disk in data.disks:
        cx, cy = _px(disk.center)
        color = _MODE_COLOR.get(disk.mode, "#555")
        dash = ' stroke-dasharray="8 6"' if disk.vacuous else ""
        parts.append(
            f'<circle cx="{cx:.4f}" cy="{cy:.4f}" r="{500.0 * disk.radius:.6f}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"{dash}/>'
        )
    for z in data.spec_a:
        cx, cy = _px(complex(z))
        h = _CROSS_PX / 2.0
        parts.append(
            f'<path d="M {cx - h:.3f} {cy - h:.3f} L {cx + h:.3f} {cy + h:.3f} '
            f'M {cx - h:.3f} {cy + h:.3f} L {cx + h:.3f} {cy - h:.3f}" '
            'stroke="black" stroke-width="1.8" fill="none"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_localization_svg(data: LocalizationData, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(localization_svg(data))


def write_localization_png(data: LocalizationData, path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Circle

    fig, ax = plt.subplots(figsize=(6, 6))
    ax.add_patch(Circle((0, 0), 1.0, fill=False, color="0.6", lw=1.0))
    for disk in data.disks:
        ax.add_patch(
            Circle(
                (disk.center.real, disk.center.imag),
                disk.radius,
                fill=False,
                color=_MODE_COLOR.get(disk.mode, "0.3"),
                lw=1.2,
                linestyle="--" if disk.vacuous else "-",
            )
        )
    ax.plot(data.spec_a.real, data.spec_a.imag, "kx", ms=6)
    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.05)
    ax.set_aspect("equal")
    ax.set_title(f"eigenvalue localization, ||A|| = {data.norm_a:.3g}, eps = {data.eps:.3g}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_figure_k_png(data: FigureData, path) -> None:
    """Panels of both power-inequality curves against n, one panel per nome."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_q: dict[float, list] = {}
    for q, n, lhs, rhs in data.rows:
        by_q.setdefault(q, []).append((n, lhs, rhs))
    qs = list(by_q)
    fig, axes = plt.subplots(1, len(qs), figsize=(4 * len(qs), 3.4), squeeze=False)
    for ax, q in zip(axes[0], qs):
        rows = sorted(by_q[q])
        ns = [r[0] for r in rows]
        ax.semilogy(ns, [r[1] for r in rows], color=_RED, label="sqrt(k(q^n))")
        ax.semilogy(ns, [r[2] for r in rows], color=_BLUE, label="2^(1-n) k(q)^(n/2)")
        ax.set_title(f"q = {q:g}")
        ax.set_xlabel("n")
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
