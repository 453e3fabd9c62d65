"""Three philosophers share two chopsticks of each kind.

No past link is disconnected, so every path space from the start is
connected.  The link at the far corner is a hollow triangle, so nothing can
be said about contractibility there.
"""

import sys

from dicollapse import builtin, past_link, theorem_verdicts
from dicollapse.simplicial import contractibility_status, format_complex

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
cap = n - 1
K = builtin(f"dining({n},{cap})")
start = (0,) * n
print(f"{n} processes, capacity {cap}: cubes by dimension {K.counts()}")

report = theorem_verdicts(K, start)
print("connected:", report.verdict_connected)
print("contractible:", report.verdict_contractible)
for v in sorted(report.obstructions_typeinf):
    S = past_link(K, start, v)
    simplices = " ".join(format_complex(S).split())
    print(f"  {v}: {simplices}  {contractibility_status(S)}")
