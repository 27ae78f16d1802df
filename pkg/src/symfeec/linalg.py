"""Exact linear algebra over Q(zeta_12) for sets of forms.

Three routes are provided and cross-checked in the tests:

* :class:`Echelon`, a sparse incremental row echelon form with exact Cyclo
  arithmetic.  It also solves, by tracking how each stored row combines
  the inputs.
* :func:`rank_mod_p`, the rank of the image of the matrix under a ring
  homomorphism onto F_p (p = 1 mod 12, zeta mapped to a root of
  x^4 - x^2 + 1).  It is a lower bound for the exact rank, hence full rank
  mod p certifies full rank.
* :func:`exact_rank`, integer elimination through FLINT on the regular
  representation (each row ``v`` contributes ``v, z*v, z^2*v, z^3*v`` as
  rational rows; the rational rank is four times the rank over the field).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import lcm

import flint

from .errors import SolveFailed
from .scalar import ZERO, root_of_unity

__all__ = [
    "ColumnIndex",
    "Echelon",
    "rank_mod_p",
    "exact_rank",
    "rank",
    "is_independent",
    "solve",
]


class ColumnIndex:
    """Assigns consecutive integers to hashable column keys."""

    def __init__(self):
        self._ids = {}

    def __len__(self):
        return len(self._ids)

    def id(self, key):
        i = self._ids.get(key)
        if i is None:
            i = self._ids[key] = len(self._ids)
        return i

    def row(self, coords):
        return {self.id(key): c for key, c in coords.items()}


def index_rows(coord_list):
    cols = ColumnIndex()
    rows = [cols.row(c) for c in coord_list]
    return rows, len(cols)


class Echelon:
    """Incremental sparse echelon form; rows are keyed by their pivot column."""

    def __init__(self):
        self.rows = {}
        self.combos = {}

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec, track):
        vec = dict(vec)
        expr = {} if track else None
        heap = list(vec)
        heapq.heapify(heap)
        rows = self.rows
        while heap:
            c = heapq.heappop(heap)
            f = vec.get(c)
            if f is None:
                continue
            row = rows.get(c)
            if row is None:
                continue
            for col, val in row.items():
                old = vec.get(col)
                if old is None:
                    vec[col] = -(f * val)
                    heapq.heappush(heap, col)
                else:
                    new = old - f * val
                    if new:
                        vec[col] = new
                    else:
                        del vec[col]
            if track:
                for tag, val in self.combos[c].items():
                    old = expr.get(tag, ZERO) + f * val
                    if old:
                        expr[tag] = old
                    else:
                        expr.pop(tag, None)
        return vec, expr

    def insert(self, vec, tag=None):
        """Add a row; return True iff it was independent of the stored rows."""
        track = tag is not None
        residual, expr = self._reduce(vec, track)
        if not residual:
            return False
        pivot = min(residual)
        inv = residual[pivot].inverse()
        self.rows[pivot] = {col: val * inv for col, val in residual.items()}
        if track:
            combo = {t: -(v * inv) for t, v in expr.items()}
            combo[tag] = combo.get(tag, ZERO) + inv
            self.combos[pivot] = combo
        return True

    def contains(self, vec):
        residual, _ = self._reduce(vec, False)
        return not residual

    def solve(self, vec):
        """Coefficients ``{tag: c}`` with ``vec = sum c * input[tag]``."""
        residual, expr = self._reduce(vec, True)
        if residual:
            raise SolveFailed("vector is not in the span of the stored rows")
        return expr


# -- modular certificate --------------------------------------------------------

_PRIMES = []


def _primes():
    if not _PRIMES:
        p = (1 << 62) - 1
        p -= (p - 1) % 12
        while len(_PRIMES) < 4:
            if flint.fmpz(p).is_prime():
                _PRIMES.append((p, _zeta_mod(p)))
            p -= 12
    return _PRIMES


def _zeta_mod(p):
    e = (p - 1) // 12
    for a in range(2, 1000):
        z = pow(a, e, p)
        if (pow(z, 4, p) - pow(z, 2, p) + 1) % p == 0:
            return z
    raise RuntimeError(f"no primitive 12th root of unity found mod {p}")


def _cyclo_mod(c, p, zpows):
    a = c.numerators
    d = c.denominator
    if d % p == 0:
        raise ZeroDivisionError
    v = (a[0] + a[1] * zpows[1] + a[2] * zpows[2] + a[3] * zpows[3]) % p
    if d != 1:
        v = v * pow(d, -1, p) % p
    return v


def rank_mod_p(rows, ncols, which=0):
    """Rank of the reduction mod the ``which``-th prime (a lower bound)."""
    p, z = _primes()[which]
    zpows = (1, z, z * z % p, z * z * z % p)
    m = len(rows)
    if m == 0 or ncols == 0:
        return 0
    mat = flint.nmod_mat(m, ncols, p)
    for i, row in enumerate(rows):
        for j, c in row.items():
            mat[i, j] = _cyclo_mod(c, p, zpows)
    return mat.rank()


def _rational_rows(rows):
    for row in rows:
        for c in row.values():
            if not c.is_rational():
                return False
    return True


def _fmpz_rank(qrows, ncols):
    m = len(qrows)
    if m == 0 or ncols == 0:
        return 0
    mat = flint.fmpz_mat(m, ncols)
    for i, row in enumerate(qrows):
        den = 1
        for v in row.values():
            den = lcm(den, v.denominator)
        for j, v in row.items():
            mat[i, j] = v.numerator * (den // v.denominator)
    return mat.rank()


def exact_rank(rows, ncols):
    """Exact rank over Q(zeta_12) by integer elimination."""
    if _rational_rows(rows):
        qrows = [{j: Fraction(c.numerators[0], c.denominator) for j, c in row.items()} for row in rows]
        return _fmpz_rank(qrows, ncols)
    zs = [root_of_unity(e) for e in range(4)]
    qrows = []
    for row in rows:
        for z in zs:
            q = {}
            for j, c in row.items():
                for t, v in enumerate((c * z).coefficients):
                    if v:
                        q[4 * j + t] = v
            qrows.append(q)
    r = _fmpz_rank(qrows, 4 * ncols)
    assert r % 4 == 0
    return r // 4


def rank(rows, ncols):
    """Exact rank, using the modular certificate when it is conclusive."""
    if not rows:
        return 0
    if _rational_rows(rows):
        return exact_rank(rows, ncols)
    try:
        rp = rank_mod_p(rows, ncols)
    except ZeroDivisionError:
        rp = -1
    if rp == len(rows):
        return rp
    return exact_rank(rows, ncols)


def is_independent(rows, ncols):
    if not rows:
        return True
    try:
        if rank_mod_p(rows, ncols) == len(rows):
            return True
    except ZeroDivisionError:
        pass
    return exact_rank(rows, ncols) == len(rows)


def echelon_rank(rows):
    e = Echelon()
    for row in rows:
        e.insert(row)
    return e.rank


def solve(basis_rows, target_rows):
    """Express each target as a combination of the basis rows (exact)."""
    e = Echelon()
    for i, row in enumerate(basis_rows):
        e.insert(row, tag=i)
    return [e.solve(t) for t in target_rows]


def as_cyclo_matrix(rows, ncols):
    return [[row.get(j, ZERO) for j in range(ncols)] for row in rows]

