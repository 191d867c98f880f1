"""Figures for verification reports, rendered headlessly to files.

Two figures per report: proven bounds against Monte Carlo estimates with
3-sigma error bars (log scale, since tail bounds and moments live on
very different scales), and per-check slack bars colored by verdict.
Rendering is pure: same report, same pixels.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .harness import Report, Z_ONE_SIDED

_VERDICT_COLORS = {"pass": "tab:green", "fail": "tab:red", "skipped": "tab:gray"}


def _check_label(check) -> str:
    parts = [f"{check.kind} t={check.t:g}"]
    for key, value in check.params.items():
        if key in ("of", "lambda_negative"):
            parts.append(f"{key}={value}")
        else:
            parts.append(f"{key}={float(value):.3g}")
    return " ".join(parts)


def _placeholder(ax, text: str) -> None:
    ax.text(0.5, 0.5, text, ha="center", va="center", transform=ax.transAxes)
    ax.set_xticks([])
    ax.set_yticks([])


def _bounds_figure(report: Report, path: Path) -> None:
    rows = [c for c in report.checks if c.bound is not None and c.estimate is not None]
    width = max(6.4, 0.55 * len(rows) + 2.0)
    fig, ax = plt.subplots(figsize=(width, 4.8))
    if not rows:
        _placeholder(ax, "no checks with both a bound and an estimate")
    else:
        xs = range(len(rows))
        bounds = [c.bound for c in rows]
        means = [c.estimate.mean for c in rows]
        errs = [Z_ONE_SIDED * c.estimate.stderr for c in rows]
        ax.plot(xs, bounds, "s", mfc="none", color="tab:blue", label="proven bound")
        ax.errorbar(
            xs, means, yerr=errs, fmt="o", ms=4, color="tab:orange",
            capsize=3, label=f"estimate ± {Z_ONE_SIDED:g}σ",
        )
        ax.set_yscale("log")
        ax.set_xticks(list(xs))
        ax.set_xticklabels([_check_label(c) for c in rows], rotation=45, ha="right", fontsize=8)
        ax.set_ylabel("value (log scale)")
        ax.legend(loc="best")
        ax.grid(True, which="both", axis="y", alpha=0.3)
    ax.set_title(f"bounds vs estimates, status: {report.status}")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def _slack_figure(report: Report, path: Path) -> None:
    rows = [c for c in report.checks if c.slack is not None]
    width = max(6.4, 0.55 * len(rows) + 2.0)
    fig, ax = plt.subplots(figsize=(width, 4.2))
    if not rows:
        _placeholder(ax, "no checks carry a slack value")
    else:
        xs = range(len(rows))
        colors = [_VERDICT_COLORS.get(c.verdict, "tab:gray") for c in rows]
        ax.bar(xs, [c.slack for c in rows], color=colors)
        ax.axhline(0.0, color="black", lw=0.8)
        ax.set_xticks(list(xs))
        ax.set_xticklabels([_check_label(c) for c in rows], rotation=45, ha="right", fontsize=8)
        ax.set_ylabel("slack = (bound − estimate) / bound")
        handles = [plt.Rectangle((0, 0), 1, 1, color=col) for col in _VERDICT_COLORS.values()]
        ax.legend(handles, list(_VERDICT_COLORS), loc="best", fontsize=8)
        ax.grid(True, axis="y", alpha=0.3)
    ax.set_title("slack per check (negative = estimate above bound)")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_figures(report: Report, out_dir: str | Path) -> list[Path]:
    """Write the report's figures under out_dir; returns the file paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    bounds_path = out / "bounds_vs_estimates.png"
    slack_path = out / "slack.png"
    _bounds_figure(report, bounds_path)
    _slack_figure(report, slack_path)
    return [bounds_path, slack_path]


__all__ = ["render_figures"]
