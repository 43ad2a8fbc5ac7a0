"""
Partition-Sum Oracles
=====================
Brute-force partial Bell polynomials straight from their definitions.
Exponential in n; only meant as an independent cross-check of the
recurrence in :mod:`algebra.combinatorics` at desk scale (n <= 8 or so).
"""

import math
from typing import Sequence

from sympy.utilities.iterables import multiset_partitions, partitions

from algebra.combinatorics import Ring, _check_bell_indices, _zero_like


def bell_partial_bruteforce(n: int, k: int, args: Sequence[Ring]) -> Ring:
    """Sum over l_1 + 2 l_2 + ... = n, l_1 + l_2 + ... = k of

    n! / prod(l_i! (i!)^{l_i}) * prod x_i^{l_i}
    """
    xs = list(args)
    _check_bell_indices(n, k, xs)
    zero = _zero_like(xs)
    if k == 0:
        return zero + 1 if n == 0 else zero

    total = zero
    # sympy hands back the same dict object on every step
    for parts in partitions(n, m=k):
        if sum(parts.values()) != k or sum(i * l for i, l in parts.items()) != n:
            continue
        denom = 1
        for i, l in parts.items():
            denom *= math.factorial(l) * math.factorial(i) ** l
        term = zero + math.factorial(n) // denom
        for i, l in parts.items():
            term = term * (xs[i - 1] ** l)
        total = total + term
    return total


def bell_partial_setpartitions(n: int, k: int, args: Sequence[Ring]) -> Ring:
    """Sum over set partitions of {1..n} into k blocks of prod x_{|block|}"""
    xs = list(args)
    _check_bell_indices(n, k, xs)
    zero = _zero_like(xs)
    if k == 0:
        return zero + 1 if n == 0 else zero

    total = zero
    for blocks in multiset_partitions(list(range(n)), k):
        term = zero + 1
        for block in blocks:
            term = term * xs[len(block) - 1]
        total = total + term
    return total


def count_set_partitions(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks, by enumeration"""
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    return sum(1 for _ in multiset_partitions(list(range(n)), k))
