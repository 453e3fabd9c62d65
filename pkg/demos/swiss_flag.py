"""The Swiss flag: two processes locking two mutexes in opposite order.

Builds the state space, finds the disconnected past links, and shows which
of them survive once unreachable states are thrown away.
"""

from dicollapse import builtin, forbidden_boxes, past_link, reachable_subcomplex, theorem_verdicts
from dicollapse.pv import swiss_flag_program
from dicollapse.reachability import deadlocks, unreachable_vertices
from dicollapse.simplicial import format_complex

prog = swiss_flag_program()
for box in forbidden_boxes(prog):
    print(f"forbidden box for {box.resource}: {box.lo} .. {box.hi}")

K = builtin("swiss_flag")
print("cubes by dimension:", K.counts())
print("unreachable from 0:", sorted(unreachable_vertices(K, (0, 0))))
print("deadlocks towards (5,5):", sorted(deadlocks(K, (5, 5))))

report = theorem_verdicts(K, (0, 0))
print("disconnected past links:", sorted(report.obstructions_type0))
print("connectedness verdict:", report.verdict_connected)

# Dropping the unreachable corner moves the obstruction to (4,4), where it
# really does split the path space in two.
Khat = reachable_subcomplex(K, (0, 0))
print("past link of (4,4) after pruning:", *format_complex(past_link(Khat, (0, 0), (4, 4))).split())
print("realized disconnections:", sorted(report.realized_disconnections))
