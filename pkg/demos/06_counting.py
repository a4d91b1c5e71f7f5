"""Counting basis states by index sum.

The number of basis states of a d1 x ... x dn system whose indices add up
to k is a bounded composition count. These counts fix the size of every
generator, and therefore the CES dimension: each generator with N terms
contributes N - 1 CES vectors.
"""

from math import prod

from entsub import bounded_composition_count, enumerate_bounded_compositions

dims = (2, 3, 4)
caps = [d - 1 for d in dims]
top = sum(caps)
counts = [bounded_composition_count(len(dims), k, caps) for k in range(top + 1)]
print("terms per index sum:", counts)
print("index sum 5:", enumerate_bounded_compositions(3, 5, caps))
print("sum of counts:", sum(counts), "== total dimension", prod(dims))
ces = sum(c - 1 for c in counts[1:top])
print("CES dimension from the counts:", ces, "== D - S - 1 =", prod(dims) - top - 1)
