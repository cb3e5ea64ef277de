"""Independent reference computations used to check the library."""

from fractions import Fraction
from functools import cmp_to_key


def _cmp(a, b):
    # a, b = (verb, raw, score); higher score, then higher raw, then verb asc
    if a[2] != b[2]:
        return -1 if a[2] > b[2] else 1
    if a[1] != b[1]:
        return -1 if a[1] > b[1] else 1
    return (a[0] > b[0]) - (a[0] < b[0])


def brute_force_global(entries, noun):
    """Full ranking by m[i, noun] * sum_j m[i, j], from the raw cell dict."""
    verbs = sorted({v for v, _ in entries})
    rows = []
    for v in verbs:
        local = entries.get((v, noun), 0)
        if local <= 0:
            continue
        row_total = 0
        for (vv, _), c in entries.items():
            if vv == v:
                row_total += c
        rows.append((v, local, local * row_total))
    return sorted(rows, key=cmp_to_key(_cmp))


def brute_force_basic(entries, noun):
    rows = [(v, c, c) for (v, n), c in entries.items() if n == noun and c > 0]
    return sorted(rows, key=cmp_to_key(_cmp))


def brute_force_weights(entries):
    total = sum(entries.values())
    out = {}
    for (v, _), c in entries.items():
        out[v] = out.get(v, 0) + c
    return {v: Fraction(s, total) for v, s in out.items()}
