"""
Two 4-cycles joined by a handle
===============================

The seven dominating sets for a (C4, C4)-dumbbell depend only on the handle
length modulo 3.  This prints the family for handle lengths 1 to 6.
"""

from fracdom import dumbbell_decomposition, from_edge_list, verify
from fracdom.graph import members
from fracdom.synthesis import dumbbell_c4c4


def c4_handle_c4(s):
    # a=0, b=1, c=2, handle d_1..d_s, then e, f, g
    d = list(range(3, 3 + s))
    e, f, g = 3 + s, 4 + s, 5 + s
    edges = [(0, 1), (1, d[0]), (d[0], 2), (2, 0)] + list(zip(d, d[1:]))
    edges += [(d[-1], e), (e, g), (g, f), (f, d[-1])]
    return from_edge_list(edges, 6 + s)


for s in range(1, 7):
    g = c4_handle_c4(s)
    report = dumbbell_decomposition(g)
    c = dumbbell_c4c4(g, report)
    print(f"handle length {s} (s mod 3 = {s % 3}), handle {min(report.handle, report.handle[::-1])}, verifies: {bool(verify(c))}")
    for d in c.sets:
        print("    ", members(d))
