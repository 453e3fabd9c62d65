"""Past links depend on where you start.

The open top box is a cube with its lid removed.  Seen from the bottom
corner the top corner has a contractible past link; seen from a corner of the
missing lid it has two isolated points.
"""

from dicollapse import builtin, contractibility_status, past_link
from dicollapse.simplicial import format_complex

L = builtin("open_top_box")
for w in [(0, 0, 0), (0, 0, 1)]:
    S = past_link(L, w, (1, 1, 1))
    simplices = " ".join(format_complex(S).split())
    print(f"from {w}: {simplices}  ->  {contractibility_status(S)}")
