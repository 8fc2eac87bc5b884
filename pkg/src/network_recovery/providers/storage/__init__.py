"""
Storage Provider implementations
"""

from .local import LocalResultStore, render_csv, render_plot_data

__all__ = [
    "LocalResultStore",
    "render_csv",
    "render_plot_data",
]
