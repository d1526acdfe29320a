"""
Classifying graphs and checking certificates
============================================

Every graph falls into one of three classes: FD = 1, FD = 2 or FD > 2.
In the last case the classifier hands back a (2r+1, r)-configuration,
a list of dominating sets that anyone can check.
"""

from fracdom import classify, verify
from fracdom.config import value
from fracdom.graph import cycle_graph, from_edge_list, members

# a path has a leaf, so FD is exactly 2
print(classify(from_edge_list([(0, 1), (1, 2)], 3)))

# a 4-cycle component also pins FD at 2
print(classify(cycle_graph(4)).reason)

# the 7-cycle needs a real certificate
result = classify(cycle_graph(7))
cert = result.certificate
print(result.verdict, cert.shape, value(cert))
for d in cert.sets:
    print("  ", members(d))

# the check is independent of how the sets were built
print("verifies:", bool(verify(cert)))

# a triangle glued to a 5-cycle through a handle: the recursion goes through a dumbbell
g = from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)], 9)
result = classify(g)
print(result.verdict, result.certificate.shape, value(result.certificate))
