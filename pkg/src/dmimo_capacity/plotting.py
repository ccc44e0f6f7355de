"""Rate-curve rendering for sweep outputs.

Kept separate from the CLI so library users can plot row sets produced any
other way. Uses the Agg backend unconditionally: output goes to files, never
to a display.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STYLES = ["-", "--", "-.", ":"]


def _fmt_cap(v: float) -> str:
    return "inf" if v == float("inf") else "%g" % v


def render_rate_curves(rows, path, title=None):
    """Render rate-vs-SNR curves to an image file.

    rows: iterable of objects with p_db, rate, scheme, c, cprime attributes
    (the CLI's sweep rows). One curve per distinct (scheme, c, cprime),
    drawn in first-appearance order so repeated runs give the same figure.
    """
    groups = {}
    for r in rows:
        groups.setdefault((r.scheme, r.c, r.cprime), []).append((r.p_db, r.rate))

    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    for i, ((name, c, cp), pts) in enumerate(groups.items()):
        pts.sort()
        ax.plot(
            [p for p, _ in pts],
            [v for _, v in pts],
            _STYLES[i % len(_STYLES)],
            label="%s (C=%s, C'=%s)" % (name, _fmt_cap(c), _fmt_cap(cp)),
        )
    ax.set_xlabel("SNR P [dB]")
    ax.set_ylabel("rate [bit/symbol/antenna]")
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    # fixed metadata so rerenders are byte-stable
    fig.savefig(path, dpi=150, metadata={"Software": "dmimo-capacity"})
    plt.close(fig)
