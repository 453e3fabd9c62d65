"""Collapse the Swiss flag with 0-collapses, keeping both endpoints.

Only vertex-into-cube pairs are used.  What is left is a graph plus the one
square that cannot go without disconnecting the past link of (4,4).
"""

from dicollapse import builtin, find_obstructions, greedy_collapse
from dicollapse.collapse import CollapseMode

K = builtin("swiss_flag")
steps, K2 = greedy_collapse(K, (0, 0), CollapseMode.ZERO, preserve=[(0, 0), (5, 5)], max_tau_dim=0)
for i, s in enumerate(steps, 1):
    print(f"{i:2d}. remove {s.pair.tau} with {s.pair.sigma}")
print("final cubes by dimension:", K2.counts())
print("remaining squares:", [str(c) for c in K2.cubes_of_dim(2)])
print("disconnected past links before:", sorted(find_obstructions(K, (0, 0))[0]))
print("disconnected past links after: ", sorted(find_obstructions(K2, (0, 0))[0]))
