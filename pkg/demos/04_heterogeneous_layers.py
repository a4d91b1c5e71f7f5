"""Qubit x qutrit x ququart, and a second GES hidden inside the CES.

Each index-sum block contributes one generator to the GES. The last vector
of the triangular basis of every block is itself GME, and those vectors
together form another GES of the same dimension.
"""

from entsub import EmbedSpec, decompose, extract_ges_layers, is_gme, span_rank

spec = EmbedSpec((2, 3, 4))
dec = decompose(spec)
layers, residual = extract_ges_layers(dec)
print("sizes:", (len(dec.product_part), len(dec.ges_basis), len(layers[0]), len(residual)))

for v in layers[0]:
    print(f"  {str(v):60s} GME={is_gme(v).gme}")
print("layer rank:", span_rank(layers[0]))

# The term order inside a block is a free choice. Any order spans the same
# complement, but the last vector (and so the extracted layer) changes.
listed_order = {
    2: [(0, 1, 1), (1, 0, 1), (1, 1, 0), (0, 0, 2), (0, 2, 0)],
    3: [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (1, 1, 1), (0, 0, 3)],
}


def by_sum(gen):
    k = sum(gen.indices()[0])
    return listed_order.get(k, gen.indices())


alt = decompose(spec, term_order=by_sum)
alt_layer = extract_ges_layers(alt)[0][0]
print("\nwith a different order in the sum-2 and sum-3 blocks:")
for v in alt_layer:
    print(f"  {v}")
print("CES spans agree:", span_rank(dec.ces_basis + alt.ces_basis) == len(dec.ces_basis))
print("extracted layers agree:", span_rank(layers[0] + alt_layer) == len(alt_layer))
