"""Fourier rows instead of triangular ones.

Using rows 2..N of the N-point discrete Fourier matrix on each generator's
terms gives an orthonormal CES basis with roots of unity as coefficients.
Grouping equal rows across generators peels off several GES layers.
"""

import numpy as np

from entsub import EmbedSpec, decompose, extract_ges_layers, is_gme, three_qubit_ges_partition

dec = decompose(EmbedSpec((2, 2, 2, 2)), scheme="dft")
layers, residual = extract_ges_layers(dec)
print("layer sizes:", [len(dec.product_part), len(dec.ges_basis)] + [len(l) for l in layers] + [len(residual)])
for j, layer in enumerate(layers, start=1):
    ranks = [is_gme(v).min_rank() for v in layer]
    print(f"  layer {j}: smallest flattening rank per member {ranks}")

gram = np.array([[a.inner(b) for b in dec.ces_basis] for a in dec.ces_basis])
print("max deviation from orthonormality:", float(np.abs(gram - np.eye(len(gram))).max()))

# Three qubits split completely into three GESs once the two product
# states are traded for the GHZ pair.
parts = three_qubit_ges_partition()
print("\nthree-qubit GES sizes:", [len(p) for p in parts])
print("all members GME:", all(is_gme(v).gme for p in parts for v in p))
