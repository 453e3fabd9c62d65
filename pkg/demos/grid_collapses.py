"""Which collapses of a 3x3 grid are directed collapses?

Removing a top edge only creates a deadlock, which paths from the origin
never notice.  Removing a bottom edge strands a vertex and changes the past
link next to it, so that collapse is refused.
"""

from dicollapse import builtin
from dicollapse.collapse import try_collapse
from dicollapse.cubes import Cube
from dicollapse.reachability import source_vertices, stuck_vertices

K = builtin("grid3")
pairs = {
    "top edge": (Cube.between((1, 3), (2, 3)), Cube.between((1, 2), (2, 3))),
    "bottom edge": (Cube.between((1, 0), (2, 0)), Cube.between((1, 0), (2, 1))),
    "corner (0,3)": (Cube((0, 3), 0), Cube.between((0, 2), (1, 3))),
    "corner (3,0)": (Cube((3, 0), 0), Cube.between((2, 0), (3, 1))),
}
for name, (tau, sigma) in pairs.items():
    step, K2 = try_collapse(K, (0, 0), tau, sigma)
    print(f"{name}: {step.verdict}")
    for c in step.result.checks:
        print(f"    {c.vertex}: {c.before} -> {c.after}")
    if name == "top edge":
        print("    stuck vertices:", sorted(stuck_vertices(K2, (3, 3))))
    if name == "bottom edge":
        print("    stranded vertices:", sorted(source_vertices(K2, (0, 0))))
