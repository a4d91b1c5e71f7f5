"""Reading entanglement off flattening ranks.

A state is biseparable across a cut exactly when the matrix obtained by
splitting its indices along that cut has rank one. Checking every cut up
to half the sites tells us whether a state is genuinely multipartite
entangled (GME).
"""

from entsub import Ket, catalecticant, dicke, is_gme, multirank, rank_exact

dims = (2, 2, 2, 2)
ghz = Ket(dims, {(0, 0, 0, 0): 1, (1, 1, 1, 1): 1})
w = dicke(4, 1)
# two Bell pairs: entangled inside {1,2} and inside {3,4}, but not across
bb = Ket(dims, {(0, 0, 0, 0): 1, (0, 0, 1, 1): 1, (1, 1, 0, 0): 1, (1, 1, 1, 1): 1})

for name, psi in [("GHZ", ghz), ("W", w), ("Bell x Bell", bb)]:
    report = is_gme(psi)
    print(f"{name:12s} 1-cuts {report.tuple_for(1)}  2-cuts {report.tuple_for(2)}  GME={report.gme}")

# The offending cut is visible directly
for I, r in multirank(bb, 2):
    print(f"  cut {I} | rest: rank {r}")

# Symmetric qubit states: every flattening collapses to a small Hankel matrix.
# Powers of a single number give rank one (a product state), anything with
# zero ends gives rank at least two.
print("rank of Hankel matrix of (1, 2, 4, 8, 16):", rank_exact(catalecticant([1, 2, 4, 8, 16], 2)))
print("rank of Hankel matrix of (0, 3, -1, 5, 0):", rank_exact(catalecticant([0, 3, -1, 5, 0], 2)))
