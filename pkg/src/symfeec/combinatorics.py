"""Index calculus: multiindices, alternator indices, permutations and signs.

Conventions used throughout the package:

* a multiindex over ``[m:n]`` is a tuple of ``n - m + 1`` non-negative
  exponents, entry ``i`` belonging to index ``m + i``;
* an alternator index is a strictly ascending tuple of integers (possibly
  empty);
* a permutation of ``[0:n]`` is the tuple ``(pi(0), ..., pi(n))`` and
  products compose right to left, ``(pi1 * pi2)(i) = pi1(pi2(i))``.
"""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement

from .errors import EmptyRange, NotInjective, Overlap, RangeMismatch

INFINITY = math.inf


# -- multiindices ------------------------------------------------------------

def enum_multiindices(r, m, n=None):
    """All multiindices of degree ``r`` over ``[m:n]`` in lexicographic order.

    ``enum_multiindices(r, n)`` is shorthand for the range ``[0:n]``.  The
    order is lexicographic in the ascending index sequence, so for degree
    one the unit vectors come out as ``e_m, e_{m+1}, ...``.
    """
    if n is None:
        m, n = 0, m
    if m > n:
        raise EmptyRange(f"empty index range [{m}:{n}]")
    if r < 0:
        return []
    size = n - m + 1
    out = []
    for seq in combinations_with_replacement(range(size), r):
        alpha = [0] * size
        for i in seq:
            alpha[i] += 1
        out.append(tuple(alpha))
    return out


def degree(alpha):
    return sum(alpha)


def support(alpha, offset=0):
    return frozenset(i + offset for i, a in enumerate(alpha) if a)


def floor_index(seq_or_alpha, multiindex=False, offset=0):
    """Smallest index of a support; ``INFINITY`` when the support is empty."""
    if multiindex:
        for i, a in enumerate(seq_or_alpha):
            if a:
                return i + offset
        return INFINITY
    return min(seq_or_alpha) if seq_or_alpha else INFINITY


def multiindex_floor(alpha):
    return floor_index(alpha, multiindex=True)


def unit(n, p):
    alpha = [0] * (n + 1)
    alpha[p] = 1
    return tuple(alpha)


def add_multiindices(alpha, beta):
    return tuple(a + b for a, b in zip(alpha, beta))


def indicator(indices, n):
    """The multiindex ``sum_{i in indices} delta_i`` over ``[0:n]``."""
    alpha = [0] * (n + 1)
    for i in indices:
        alpha[i] += 1
    return tuple(alpha)


# -- alternators -------------------------------------------------------------

def enum_alternators(a, b, m, n):
    """Strictly ascending maps ``[a:b] -> [m:n]``, lexicographically ordered.

    By convention the set is ``[()]`` when ``a > b``.
    """
    if a > b:
        return [()]
    return list(combinations(range(m, n + 1), b - a + 1))


def sigma_set(k, n):
    """Sigma(k, n) = Sigma(1:k, 0:n)."""
    return enum_alternators(1, k, 0, n)


def sigma0_set(k, n):
    """Sigma_0(k, n) = Sigma(0:k, 0:n)."""
    return enum_alternators(0, k, 0, n)


def _inversions(seq):
    count = 0
    for i in range(len(seq)):
        si = seq[i]
        for j in range(i + 1, len(seq)):
            if seq[j] < si:
                count += 1
    return count


def sort_with_sign(tau):
    """Sort an injective sequence; return ``(ascending tuple, sign)``."""
    tau = tuple(tau)
    if len(set(tau)) != len(tau):
        raise NotInjective(f"sequence {tau} repeats a value")
    sign = -1 if _inversions(tau) % 2 else 1
    return tuple(sorted(tau)), sign


def sequence_sign(tau):
    """epsilon(tau): sign of the sorting permutation; 0 if tau is not injective."""
    tau = tuple(tau)
    if len(set(tau)) != len(tau):
        return 0
    return -1 if _inversions(tau) % 2 else 1


def is_injective(tau):
    return len(set(tau)) == len(tuple(tau))


def complement(sigma, n):
    """The ascending complement of ``[sigma]`` in ``[0:n]``."""
    s = set(sigma)
    if any(i < 0 or i > n for i in s) or len(s) != len(tuple(sigma)):
        raise RangeMismatch(f"{tuple(sigma)} is not an alternator into [0:{n}]")
    return tuple(i for i in range(n + 1) if i not in s)


def eps_split(left, right):
    """Sign of the permutation sorting the concatenation ``left + right``."""
    left, right = tuple(left), tuple(right)
    if set(left) & set(right):
        raise Overlap(f"{left} and {right} share indices")
    return sort_with_sign(left + right)[1]


def alternator_plus(sigma, q):
    """``sigma + q``: the alternator with image ``[sigma] | {q}``."""
    if q in sigma:
        raise Overlap(f"{q} already in {sigma}")
    return tuple(sorted(sigma + (q,)))


def alternator_minus(sigma, p):
    if p not in sigma:
        raise RangeMismatch(f"{p} not in {sigma}")
    return tuple(i for i in sigma if i != p)


# -- permutations ------------------------------------------------------------

def identity(n):
    return tuple(range(n + 1))


def compose(p, q):
    """``(p * q)(i) = p(q(i))``."""
    return tuple(p[i] for i in q)


def inverse(p):
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def perm_sign(p):
    return -1 if _inversions(p) % 2 else 1


def cycle(indices, n):
    """The cycle ``(x1 x2 ... xm)`` on ``[0:n]``: ``x1 -> x2 -> ... -> x1``."""
    table = list(range(n + 1))
    indices = tuple(indices)
    for i, x in enumerate(indices):
        table[x] = indices[(i + 1) % len(indices)]
    return tuple(table)


def transposition(i, j, n):
    return cycle((i, j), n)


def generators(n):
    """The generating pair ``{(0 1), (0 1 ... n)}`` of Perm(0:n)."""
    if n <= 0:
        return []
    if n == 1:
        return [transposition(0, 1, 1)]
    return [transposition(0, 1, n), cycle(range(n + 1), n)]


def all_permutations(n):
    from itertools import permutations

    return [tuple(p) for p in permutations(range(n + 1))]


def is_permutation(p, n):
    return sorted(p) == list(range(n + 1))
