"""Independent oracles and fixture parsing shared by the tests."""

import re
from itertools import combinations, product

from entsub.gaussian import GaussianRational
from entsub.states import Ket

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\|(\d+)>")


def ket_from_text(dims, text):
    """Parse '|001> + |010> - 2|100>' into an integer Ket (single-digit levels)."""
    coeffs = {}
    for sign, mag, label in _TERM.findall(text.replace(" ", "")):
        value = int(mag) if mag else 1
        if sign == "-":
            value = -value
        index = tuple(int(c) for c in label)
        coeffs[index] = coeffs.get(index, 0) + value
    return Ket(dims, coeffs)


def kets_from_lines(dims, block):
    return [ket_from_text(dims, line) for line in block.strip().splitlines() if line.strip()]


def det_by_expansion(m):
    # Laplace expansion along the first row
    size = len(m)
    if size == 1:
        return m[0][0]
    total = GaussianRational(0)
    for c in range(size):
        if not m[0][c]:
            continue
        minor = [row[:c] + row[c + 1 :] for row in m[1:]]
        term = m[0][c] * det_by_expansion(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def rank_by_minors(m):
    """Largest k with a nonzero k x k minor."""
    rows = [[GaussianRational.coerce(v) for v in r] for r in m]
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    for k in range(min(nr, nc), 0, -1):
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                if det_by_expansion([[rows[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def brute_compositions(bounds, k):
    return [t for t in product(*(range(b + 1) for b in bounds)) if sum(t) == k]


def brute_state(dims, keep):
    """0/1 Ket over every multi-index accepted by ``keep``."""
    return Ket(dims, {i: 1 for i in product(*(range(d) for d in dims)) if keep(i)})


def occupation(index, d):
    return tuple(index.count(level) for level in range(d))


def span_equal(a, b):
    from entsub.embeddings import span_rank

    ra, rb, ru = span_rank(a), span_rank(b), span_rank(list(a) + list(b))
    return ra == rb == ru
