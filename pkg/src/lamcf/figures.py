"""Matplotlib report figures for construction streams.

The CLI report path can drop a figure next to its JSON-lines output;
this renders trace growth and axis lengths against the step index.
matplotlib is imported lazily so the rest of the package never pays for
it.
"""

from __future__ import annotations

from typing import Sequence

from .legendre import LegendreStep


def save_stream_figure(steps: Sequence[LegendreStep], path: str) -> str:
    """Write a two-panel summary figure for a stream; returns the path."""
    from matplotlib.figure import Figure

    steps = list(steps)
    ks = [s.k for s in steps]
    traces = [abs(s.trace) for s in steps]

    fig = Figure(figsize=(8.0, 4.0))
    ax_trace, ax_len = fig.subplots(1, 2)

    ax_trace.semilogy(ks, traces, marker="o", color="#1f77b4")
    ax_trace.set_xlabel("step k")
    ax_trace.set_ylabel("|trace|")
    ax_trace.set_title("trace growth")
    ax_trace.grid(True, which="both", alpha=0.3)

    axis_ks = [s.k for s in steps if s.axis_length is not None]
    axis_lengths = [s.axis_length for s in steps if s.axis_length is not None]
    if axis_ks:
        ax_len.plot(axis_ks, axis_lengths, marker="s", color="#d62728")
    ax_len.set_xlabel("step k")
    ax_len.set_ylabel("axis length")
    ax_len.set_title("translation lengths (det +1 steps)")
    ax_len.grid(True, alpha=0.3)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    return path
