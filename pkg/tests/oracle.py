"""Independent pointwise evaluation of barycentric forms on the reference simplex.

A point is x in Q^n; lambda_i = x_i for i >= 1 and lambda_0 = 1 - sum(x).  The
value of a k-form is its coefficient vector in the Cartesian basis
dx_tau, tau an ascending k-subset of [1:n], computed with determinants.
"""

from fractions import Fraction
from itertools import combinations, permutations

from symfeec.scalar import Cyclo


def _det(m):
    size = len(m)
    total = Fraction(0)
    for p in permutations(range(size)):
        inv = sum(1 for i in range(size) for j in range(i + 1, size) if p[i] > p[j])
        prod = Fraction(1)
        for i in range(size):
            prod *= m[i][p[i]]
        total += -prod if inv % 2 else prod
    return total


def _grad(i, n):
    if i == 0:
        return [Fraction(-1)] * n
    return [Fraction(int(j == i - 1)) for j in range(n)]


def evaluate(form, x):
    form = form.to_form()
    n, k = form.n, form.k
    lam = [1 - sum(x, Fraction(0))] + [Fraction(v) for v in x]
    out = {}
    for tau in combinations(range(n), k):
        acc = Cyclo(0)
        for (alpha, sigma), c in form.terms.items():
            mono = Fraction(1)
            for i, a in enumerate(alpha):
                mono *= lam[i] ** a
            if not mono:
                continue
            minor = _det([[_grad(s, n)[t] for t in tau] for s in sigma]) if k else Fraction(1)
            if minor:
                acc = acc + c * (mono * minor)
        if acc:
            out[tau] = acc
    return out


def sample_points(n, count=6):
    pts = []
    for s in range(count):
        pts.append([Fraction(2 + 3 * s + 5 * j, 7 + 11 * s + 13 * j) for j in range(n)])
    return pts


def pointwise_equal(a, b, count=8):
    """Equality on enough rational points to separate low-degree polynomials."""
    return all(evaluate(a, x) == evaluate(b, x) for x in sample_points(a.n, count))
