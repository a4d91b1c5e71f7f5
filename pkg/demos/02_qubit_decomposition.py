"""Four qubits: from a handful of product states to a full decomposition.

Five product states (|0> + x|1>)^(x)4 at distinct x span the symmetric
subspace. Orthogonalizing them and regrouping by Hamming weight yields
two product states, three Dicke states that span a genuinely entangled
subspace, and an 11-dimensional completely entangled complement.
"""

from entsub import (
    EmbedSpec,
    build_nupb,
    choose_generic_points,
    decompose,
    gram_schmidt,
    span_rank,
    verify,
)

spec = EmbedSpec((2, 2, 2, 2))
points = choose_generic_points(spec)
nupb = build_nupb(spec, points)
print("evaluation points:", [str(p.x) for p in points])
print("product states span rank:", span_rank(nupb.members))

ortho = gram_schmidt(nupb.members)
print("after exact Gram-Schmidt:", len(ortho), "pairwise orthogonal vectors")

dec = decompose(spec)
p, g, c = dec.sizes
print(f"\nproduct part {p}, GES {g}, CES {c}")
print("GES basis:")
for psi in dec.ges_basis:
    print("  ", psi)
print("first CES block (orthogonal to the W-like generator):")
for v, nrm in zip(dec.ces_blocks[0], dec.squared_norms):
    print(f"   {v}    squared norm {nrm}")

report = verify(dec)
for check in report.checks:
    print(f"{'ok ' if check.passed else 'BAD'} {check.name:26s} {check.detail}")
