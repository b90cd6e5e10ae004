"""Planar bar-joint framework analysis: angle-preserving classes, flexes,
NAC-colorings, cartesian product structure, Cn symmetry, tessellations."""

try:
    from ._parrig import *  # noqa: F401,F403  (installed package layout)
    from ._parrig import __doc__ as _doc
except ImportError:  # build-tree layout: _parrig.so next to the package dir
    from _parrig import *  # noqa: F401,F403
    from _parrig import __doc__ as _doc

__all__ = [
    "Framework",
    "make_framework",
    "parse",
    "serialize",
    "classes",
    "check",
    "verdict",
    "flex_at",
    "rigidity_rank",
    "nac_colorings",
    "nac_verify",
    "embed_coords",
    "tiling",
    "tiling_names",
    "symmetry_class_count",
    "render_svg",
]
