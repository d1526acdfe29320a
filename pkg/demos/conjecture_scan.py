"""
Looking for FD strictly between 2 and 7/3
=========================================

The conjectured gap says nothing lands in (2, 7/3).  Scan every labelled
graph on up to 5 vertices and a batch of random ones on 7 to 9 vertices.
"""

from fracdom.formats import encode_graph6
from fracdom.generators import exhaustive_graphs, random_graphs
from fracdom.oracle import conjecture_scan

report = conjecture_scan(exhaustive_graphs(5))
print(len(report.records), "graphs,", len(report.flagged), "flagged,",
      "smallest FD above 2:", report.min_above_two)
print("witnesses:", [encode_graph6(g) for g in report.witnesses][:10])

report = conjecture_scan(random_graphs(300, 7, 9, seed=7))
print(len(report.records), "random graphs,", len(report.flagged), "flagged,",
      "smallest FD above 2:", report.min_above_two)
