"""
The exact LP oracle
===================

For small graphs FD can be computed outright: maximise the total weight of
minimal dominating sets with every vertex carrying weight at most 1.  The
solver works in exact integers, so 7/3 comes out as 7/3.
"""

from fracdom import exact_fd
from fracdom.graph import complete_bipartite, cycle_graph, members
from fracdom.oracle import verify_optimality
from fracdom.synthesis import cycle_fd

for n in range(3, 13):
    fd = exact_fd(cycle_graph(n))
    print(f"C{n:<2} FD = {str(fd.value):>5}   closed form {cycle_fd(n)}")

# the optimal weighting for K_{2,3}
fd = exact_fd(complete_bipartite(2, 3))
print("K_{2,3}:", fd.value)
for d, w in fd.support():
    print("  ", members(d), w)

# prices on the vertices form a dual solution; together they prove optimality
print("prices:", [str(p) for p in fd.prices])
print("optimal:", verify_optimality(complete_bipartite(2, 3), fd))

# clearing denominators turns the weights into an integer configuration
print("scaled configuration shape:", fd.scaled_configuration.shape)
