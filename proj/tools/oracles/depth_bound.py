"""Independent evaluation of the Clifford-counting depth lower bound.

Prints the frozen regression values used by the C++ tests.
"""
from math import comb, factorial

import mpmath

mpmath.mp.dps = 60


def clifford_count(n, sum_form=False):
    if n == 0:
        return 1
    terms = [4**j - 1 for j in range(1, n + 1)]
    if sum_form:
        agg = sum(terms)
    else:
        agg = 1
        for t in terms:
            agg *= t
    return 2 ** (n * n + 2 * n) * agg


def layer_count(n, l, size_cl):
    g = -(-n // l)
    return factorial(g * l) // (factorial(l) ** g * factorial(g)) * size_cl**g


def bound(n, k, l, sum_form=False):
    num = mpmath.log(clifford_count(k, sum_form))
    den = mpmath.log(layer_count(n, l, clifford_count(l, sum_form)))
    return num / den


if __name__ == "__main__":
    print("C2", clifford_count(2), "C2 sum", clifford_count(2, True))
    print("n=16 k=6 l=2", mpmath.nstr(bound(16, 6, 2), 30))
    print("n=16 k=6 l=2 sum", mpmath.nstr(bound(16, 6, 2, True), 30))
    for m in range(2, 12, 2):
        n, k = 2**m, comb(m, m // 2)
        b = bound(n, k, 2)
        ref = mpmath.mpf(k * k) / (n * mpmath.log(n))
        print("m", m, "n", n, "k", k, "bound", mpmath.nstr(b, 25), "ratio", mpmath.nstr(b / ref, 25))
