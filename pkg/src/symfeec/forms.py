"""Barycentric differential forms with exact coefficients.

A :class:`Form` on the ``n``-simplex is a finite sum of terms
``c * lambda^alpha dlambda_sigma`` keyed by ``(alpha, sigma)``, where
``alpha`` is a multiindex over ``[0:n]`` and ``sigma`` an ascending
alternator of length ``k``.  A :class:`WhitneyForm` stores the same kind of
object as a sum of ``c * lambda^alpha phi_rho`` with ``rho`` of length
``k + 1``; it is the natural carrier for the trimmed family and expands to a
:class:`Form` on demand.

Two normal forms decide equality:

* :func:`reduce` eliminates ``lambda_0`` and ``dlambda_0`` (affine chart);
* :func:`coordinates` homogenizes to a fixed degree and eliminates only
  ``dlambda_0``.  It never expands powers of ``1 - sum(lambda_i)`` and so
  stays sparse; the linear algebra uses it.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .combinatorics import (
    complement,
    enum_alternators,
    enum_multiindices,
    sequence_sign,
    sort_with_sign,
)
from .errors import DegreeTooLow, DimensionMismatch, NotAFace, RangeMismatch
from .scalar import Cyclo, as_cyclo

__all__ = [
    "Form",
    "WhitneyForm",
    "Face",
    "ReducedForm",
    "as_form",
    "monomial_form",
    "constant",
    "barycentric",
    "dlambda",
    "whitney",
    "wedge",
    "exterior_derivative",
    "trace",
    "reduce",
    "equals",
    "homogenize",
    "coordinates",
    "faces",
    "bubble",
]


def _add_into(target, key, c):
    old = target.get(key)
    if old is None:
        if c:
            target[key] = c
    else:
        new = old + c
        if new:
            target[key] = new
        else:
            del target[key]


class _TermSum:
    """Shared linear-combination behaviour of Form and WhitneyForm."""

    __slots__ = ("n", "k", "terms")

    def __init__(self, n, k, terms=None):
        self.n = n
        self.k = k
        clean = {}
        if terms:
            for key, c in terms.items():
                c = as_cyclo(c)
                if c:
                    clean[key] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, n, k, terms):
        obj = object.__new__(cls)
        obj.n = n
        obj.k = k
        obj.terms = terms
        return obj

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.n != self.n or other.k != self.k:
            raise DimensionMismatch(
                f"(n, k) = ({self.n}, {self.k}) vs ({other.n}, {other.k})"
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _add_into(out, key, c)
        return self._wrap(self.n, self.k, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._wrap(self.n, self.k, {key: -c for key, c in self.terms.items()})

    def scale(self, c):
        c = as_cyclo(c)
        if not c:
            return self._wrap(self.n, self.k, {})
        return self._wrap(self.n, self.k, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, _TermSum):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        # structural equality of the stored representation; use equals() for
        # equality as differential forms
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.k, frozenset(self.terms.items())))

    def items(self):
        """Terms in the deterministic lexicographic order of their keys."""
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def degrees(self):
        return {sum(alpha) for alpha, _ in self.terms}

    def to_json(self, index_name):
        return {
            "n": self.n,
            "k": self.k,
            "terms": [
                {"alpha": list(alpha), index_name: list(idx), "coeff": c.to_json()}
                for (alpha, idx), c in self.items()
            ],
        }

    @classmethod
    def _from_json(cls, data, index_name):
        terms = {}
        for t in data["terms"]:
            terms[(tuple(t["alpha"]), tuple(t[index_name]))] = Cyclo.from_json(t["coeff"])
        return cls(data["n"], data["k"], terms)


class Form(_TermSum):
    """A sum of ``c * lambda^alpha dlambda_sigma`` on the n-simplex."""

    __slots__ = ()

    def degree(self):
        """Largest polynomial degree among the terms (0 for the zero form)."""
        return max((sum(alpha) for alpha, _ in self.terms), default=0)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def to_form(self):
        return self

    def to_json(self):
        return super().to_json("sigma")

    @classmethod
    def from_json(cls, data):
        return cls._from_json(data, "sigma")

    def __repr__(self):
        if not self.terms:
            return f"Form(n={self.n}, k={self.k}, 0)"
        return f"Form(n={self.n}, k={self.k}, {render(self)})"


class WhitneyForm(_TermSum):
    """A sum of ``c * lambda^alpha phi_rho``; ``rho`` ascending of length k+1."""

    __slots__ = ()

    def degree(self):
        return max((sum(alpha) + 1 for alpha, _ in self.terms), default=0)

    def to_form(self):
        out = {}
        n = self.n
        for (alpha, rho), c in self.terms.items():
            for (p, rest), s in _whitney_terms(rho):
                beta = list(alpha)
                beta[p] += 1
                _add_into(out, (tuple(beta), rest), c if s > 0 else -c)
        return Form._wrap(n, self.k, out)

    def to_json(self):
        return super().to_json("rho")

    @classmethod
    def from_json(cls, data):
        return cls._from_json(data, "rho")

    def __repr__(self):
        body = " + ".join(
            f"{c}*l^{list(a)}*phi{list(r)}" for (a, r), c in self.items()
        ) or "0"
        return f"WhitneyForm(n={self.n}, k={self.k}, {body})"


def as_form(x):
    """Expand any supported carrier to a :class:`Form`."""
    return x.to_form()


def render(form):
    parts = []
    for (alpha, sigma), c in form.items():
        lam = "*".join(
            f"l{i}" if a == 1 else f"l{i}^{a}" for i, a in enumerate(alpha) if a
        )
        dl = "d" + "".join(str(i) for i in sigma) if sigma else ""
        body = "*".join(x for x in (lam, dl) if x) or "1"
        parts.append(f"{c}*{body}")
    return " + ".join(parts)


# -- constructors --------------------------------------------------------------

def _check_alpha(alpha, n):
    alpha = tuple(alpha)
    if len(alpha) != n + 1 or any(a < 0 for a in alpha):
        raise RangeMismatch(f"multiindex {alpha} does not live on [0:{n}]")
    return alpha


def monomial_form(n, alpha, sigma, c=1):
    """``c * lambda^alpha dlambda_sigma``; a repeated index gives the zero form."""
    alpha = _check_alpha(alpha, n)
    sigma = tuple(sigma)
    if any(i < 0 or i > n for i in sigma):
        raise RangeMismatch(f"alternator {sigma} does not map into [0:{n}]")
    k = len(sigma)
    s = sequence_sign(sigma)
    if s == 0:
        return Form._wrap(n, k, {})
    c = as_cyclo(c)
    return Form(n, k, {(alpha, tuple(sorted(sigma))): c if s > 0 else -c})


def constant(n, c=1):
    return monomial_form(n, (0,) * (n + 1), (), c)


def barycentric(n, i):
    alpha = [0] * (n + 1)
    alpha[i] = 1
    return monomial_form(n, alpha, ())


def dlambda(n, *indices):
    return monomial_form(n, (0,) * (n + 1), indices)


def bubble(n, indices):
    """The multiindex of ``prod_{i in indices} lambda_i``."""
    alpha = [0] * (n + 1)
    for i in indices:
        alpha[i] += 1
    return tuple(alpha)


@lru_cache(maxsize=None)
def _whitney_terms(rho):
    """Expansion of phi_rho for ascending rho: ((p, rho - p), sign) pairs."""
    out = []
    for pos, p in enumerate(rho):
        rest = rho[:pos] + rho[pos + 1:]
        out.append(((p, rest), -1 if pos % 2 else 1))
    return tuple(out)


def whitney(n, rho, c=1):
    """The Whitney form ``phi_rho``; ``rho`` may be any sequence into [0:n]."""
    rho = tuple(rho)
    if any(i < 0 or i > n for i in rho):
        raise RangeMismatch(f"{rho} does not map into [0:{n}]")
    k = len(rho) - 1
    s = sequence_sign(rho)
    if s == 0 or k < 0:
        return Form._wrap(n, max(k, 0), {})
    c = as_cyclo(c)
    zero = (0,) * (n + 1)
    w = WhitneyForm._wrap(n, k, {(zero, tuple(sorted(rho))): c if s > 0 else -c})
    return w.to_form()


def whitney_monomial(n, alpha, rho, c=1):
    """``c * lambda^alpha phi_rho`` in Whitney representation."""
    alpha = _check_alpha(alpha, n)
    rho = tuple(rho)
    s = sequence_sign(rho)
    if s == 0:
        return WhitneyForm._wrap(n, len(rho) - 1, {})
    c = as_cyclo(c)
    return WhitneyForm(n, len(rho) - 1, {(alpha, tuple(sorted(rho))): c if s > 0 else -c})


# -- algebra -------------------------------------------------------------------

def _merge_alternators(s1, s2):
    """Sorted union with the sign of concatenation, or None on overlap."""
    if set(s1) & set(s2):
        return None
    merged, sign = sort_with_sign(s1 + s2)
    return merged, sign


def wedge(a, b):
    a, b = a.to_form(), b.to_form()
    if a.n != b.n:
        raise DimensionMismatch(f"n = {a.n} vs {b.n}")
    n = a.n
    k = a.k + b.k
    out = {}
    if k > n + 1:
        return Form._wrap(n, k, out)
    for (al, sa), ca in a.terms.items():
        for (be, sb), cb in b.terms.items():
            m = _merge_alternators(sa, sb)
            if m is None:
                continue
            sigma, sign = m
            c = ca * cb
            gamma = tuple(x + y for x, y in zip(al, be))
            _add_into(out, (gamma, sigma), c if sign > 0 else -c)
    return Form._wrap(n, k, out)


def exterior_derivative(a):
    a = a.to_form()
    out = {}
    for (alpha, sigma), c in a.terms.items():
        for p, ap in enumerate(alpha):
            if not ap or p in sigma:
                continue
            beta = list(alpha)
            beta[p] -= 1
            merged, sign = sort_with_sign((p,) + sigma)
            _add_into(out, (tuple(beta), merged), c * (ap * sign))
    return Form._wrap(a.n, a.k + 1, out)


# -- faces and traces ------------------------------------------------------------

class Face:
    """A subsimplex given by its ascending vertex list ``inclusion``."""

    __slots__ = ("n", "inclusion")

    def __init__(self, n, inclusion):
        inclusion = tuple(inclusion)
        if (
            not inclusion
            or list(inclusion) != sorted(set(inclusion))
            or inclusion[0] < 0
            or inclusion[-1] > n
        ):
            raise NotAFace(f"{inclusion} is not an ascending vertex selection of [0:{n}]")
        self.n = n
        self.inclusion = inclusion

    @property
    def dim(self):
        return len(self.inclusion) - 1

    def local(self, i):
        return self.inclusion.index(i)

    def issubface(self, other):
        return set(self.inclusion) <= set(other.inclusion)

    def __eq__(self, other):
        return isinstance(other, Face) and (self.n, self.inclusion) == (other.n, other.inclusion)

    def __hash__(self):
        return hash((self.n, self.inclusion))

    def __repr__(self):
        return f"Face({self.n}, {list(self.inclusion)})"


def faces(n, m=None):
    """Faces of the n-simplex, by dimension then lexicographically."""
    dims = range(n + 1) if m is None else [m]
    out = []
    for d in dims:
        for verts in enumerate_alternators_0(d, n):
            out.append(Face(n, verts))
    return out


def enumerate_alternators_0(m, n):
    return enum_alternators(0, m, 0, n)


def trace(a, face):
    """Restriction to a face, relabelled onto the face's own indices [0:m]."""
    if not isinstance(face, Face):
        raise NotAFace(f"{face!r} is not a Face")
    if face.n != a.n:
        raise NotAFace(f"face of the {face.n}-simplex used on the {a.n}-simplex")
    iota = face.inclusion
    pos = {v: j for j, v in enumerate(iota)}
    m = face.dim
    if isinstance(a, WhitneyForm):
        out = {}
        for (alpha, rho), c in a.terms.items():
            if any(alpha[i] for i in range(a.n + 1) if i not in pos):
                continue
            if any(i not in pos for i in rho):
                continue
            beta = tuple(alpha[v] for v in iota)
            _add_into(out, (beta, tuple(pos[i] for i in rho)), c)
        return WhitneyForm._wrap(m, a.k, out)
    out = {}
    for (alpha, sigma), c in a.terms.items():
        if any(alpha[i] for i in range(a.n + 1) if i not in pos):
            continue
        if any(i not in pos for i in sigma):
            continue
        beta = tuple(alpha[v] for v in iota)
        _add_into(out, (beta, tuple(pos[i] for i in sigma)), c)
    return Form._wrap(m, a.k, out)


# -- normal forms ----------------------------------------------------------------

class ReducedForm:
    """Coordinates after substituting lambda_0 = 1 - sum and dlambda_0 = -sum.

    Keys are ``(beta, tau)`` with ``beta`` a multiindex over ``[1:n]`` and
    ``tau`` an ascending subset of ``[1:n]``.
    """

    __slots__ = ("n", "k", "coefficients")

    def __init__(self, n, k, coefficients):
        self.n = n
        self.k = k
        self.coefficients = {key: c for key, c in coefficients.items() if c}

    def __eq__(self, other):
        if not isinstance(other, ReducedForm):
            return NotImplemented
        return (self.n, self.k, self.coefficients) == (other.n, other.k, other.coefficients)

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self.coefficients.items())))

    def is_zero(self):
        return not self.coefficients

    def __repr__(self):
        return f"ReducedForm(n={self.n}, k={self.k}, {len(self.coefficients)} terms)"


@lru_cache(maxsize=None)
def _eliminate_d0(sigma, n):
    """dlambda_sigma with dlambda_0 replaced by -sum_{i>=1} dlambda_i."""
    if not sigma or sigma[0] != 0:
        return ((sigma, 1),)
    rest = sigma[1:]
    out = []
    for i in range(1, n + 1):
        if i in rest:
            continue
        merged, sign = sort_with_sign((i,) + rest)
        out.append((merged, -sign))
    return tuple(out)


@lru_cache(maxsize=None)
def _multinomial_powers(e, n, offset):
    """Expansion of (x_offset + ... + x_n)^e as ((exponent vector over [0:n]), coeff)."""
    size = n - offset + 1
    out = []
    for gamma in enum_multiindices(e, size - 1):
        coef = factorial(e)
        for g in gamma:
            coef //= factorial(g)
        out.append(((0,) * offset + gamma, coef))
    return tuple(out)


def reduce(a):
    """The affine-chart normal form (eliminates index 0)."""
    a = a.to_form()
    n = a.n
    out = {}
    for (alpha, sigma), c in a.terms.items():
        a0 = alpha[0]
        tail = alpha[1:]
        # (1 - s)^a0 = sum_j binom(a0, j) (-1)^j s^j with s = lambda_1 + ... + lambda_n
        poly = []
        for j in range(a0 + 1):
            b = factorial(a0) // (factorial(j) * factorial(a0 - j))
            if j % 2:
                b = -b
            for gamma, m in _multinomial_powers(j, n, 1):
                poly.append((gamma[1:], b * m))
        for tau, s in _eliminate_d0(sigma, n):
            for gamma, m in poly:
                beta = tuple(x + y for x, y in zip(tail, gamma))
                _add_into(out, (beta, tau), c * (m * s))
    return ReducedForm(n, a.k, out)


def equals(a, b):
    """Equality as differential forms on the simplex."""
    a, b = a.to_form(), b.to_form()
    if a.n != b.n or (a.k != b.k and a and b):
        raise DimensionMismatch(f"(n, k) = ({a.n}, {a.k}) vs ({b.n}, {b.k})")
    if a.k != b.k:
        return not a and not b
    return reduce(a - b).is_zero()


def homogenize(a, r):
    """Rewrite every term at polynomial degree exactly ``r``."""
    a = a.to_form()
    n = a.n
    out = {}
    for (alpha, sigma), c in a.terms.items():
        e = r - sum(alpha)
        if e < 0:
            raise DegreeTooLow(f"term of degree {sum(alpha)} exceeds target degree {r}")
        if e == 0:
            _add_into(out, (alpha, sigma), c)
            continue
        for gamma, m in _multinomial_powers(e, n, 0):
            beta = tuple(x + y for x, y in zip(alpha, gamma))
            _add_into(out, (beta, sigma), c * m)
    return Form._wrap(n, a.k, out)


def coordinates(a, degree=None):
    """Homogeneous normal coordinates ``{(alpha, tau): c}`` with 0 not in tau.

    All terms are first lifted to polynomial degree ``degree`` (default: the
    form's own maximal degree).  Distinct keys are linearly independent
    functions on the simplex, so two forms are equal iff their coordinates
    at a common degree coincide.
    """
    a = a.to_form()
    n = a.n
    if degree is None:
        degree = a.degree()
    out = {}
    for (alpha, sigma), c in a.terms.items():
        e = degree - sum(alpha)
        if e < 0:
            raise DegreeTooLow(f"term of degree {sum(alpha)} exceeds target degree {degree}")
        if e == 0:
            lifts = ((alpha, 1),)
        else:
            lifts = tuple(
                (tuple(x + y for x, y in zip(alpha, gamma)), m)
                for gamma, m in _multinomial_powers(e, n, 0)
            )
        for tau, s in _eliminate_d0(sigma, n):
            for beta, m in lifts:
                f = m * s
                _add_into(out, (beta, tau), c if f == 1 else (-c if f == -1 else c * f))
    return out


def whitney_complement_sign(rho, n):
    """epsilon(rho^c, rho) for rho in Sigma_0(k, n)."""
    rc = complement(rho, n)
    return sort_with_sign(rc + tuple(rho))[1]


def zero(n, k):
    return Form._wrap(n, k, {})
