"""Three ququarts, trading GES dimension for CES dimension.

Substituting more affine coordinates by powers of a single variable
shrinks the product family. Fewer product states means a larger
completely entangled complement and a smaller genuinely entangled part.
"""

from entsub import EmbedSpec, count_distinct_monomials, decompose, max_ces_dim
from entsub.embeddings import product_labels

dims = (4, 4, 4)
print(f"{'k_sub':>5} {'family':>14} {'points':>6} {'product':>7} {'GES':>4} {'CES':>4}  product states")
for k in range(3):
    spec = EmbedSpec(dims, k)
    p, g, c = decompose(spec).sizes
    labels = ", ".join(f"|{s}>" for s in product_labels(spec))
    print(f"{k:>5} {spec.family.value:>14} {count_distinct_monomials(3, 4, k):>6} {p:>7} {g:>4} {c:>4}  {labels}")

print("largest possible CES for these dims:", max_ces_dim(dims))
