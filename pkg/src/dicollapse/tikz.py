"""Standalone TikZ pictures of planar cubical complexes."""

from __future__ import annotations

from .cubes import CubicalComplex
from .errors import UnsupportedDimension

_HEADER = r"""\documentclass[tikz]{standalone}
\begin{document}
\begin{tikzpicture}[dot/.style={circle, fill, inner sep=1.2pt}]
"""
_FOOTER = r"""\end{tikzpicture}
\end{document}
"""


def export_tikz(K: CubicalComplex) -> str:
    """One fill per square, one draw per edge, one dot per vertex."""
    if K.n != 2:
        raise UnsupportedDimension(f"TikZ export needs a 2-dimensional complex, got n={K.n}")
    out = [_HEADER]
    for c in K.cubes_of_dim(2):
        (x, y), (X, Y) = c.base, c.top
        out.append(f"\\fill[gray!30] ({x},{y}) rectangle ({X},{Y});\n")
    for c in K.cubes_of_dim(1):
        (x, y), (X, Y) = c.base, c.top
        out.append(f"\\draw ({x},{y}) -- ({X},{Y});\n")
    for c in K.cubes_of_dim(0):
        x, y = c.base
        out.append(f"\\node[dot] at ({x},{y}) {{}};\n")
    out.append(_FOOTER)
    return "".join(out)
