"""Canonical spanning sets and bases of the polynomial form spaces.

A :class:`SpaceSpec` names one of ``P_r L^k``, ``P-_r L^k`` or their
variants with vanishing traces (``ring=True``) on the ``n``-simplex.
Dimensions are never tabulated: they are ranks of the spanning sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    complement,
    enum_multiindices,
    floor_index,
    multiindex_floor,
    sigma0_set,
    sigma_set,
)
from .errors import MixedSpace, UnsupportedDegree
from .forms import (
    Form,
    WhitneyForm,
    coordinates,
    faces,
    homogenize,
    trace,
)
from .linalg import Echelon, exact_rank, index_rows, is_independent, rank
from .scalar import ONE

__all__ = [
    "SpaceSpec",
    "FormSet",
    "spanning_set",
    "basis_B",
    "rank_dim",
    "dimension",
    "contains",
    "homogenize",
    "coordinate_rows",
    "has_vanishing_traces",
]

FAMILIES = ("P", "Pminus")


@dataclass(frozen=True, order=True)
class SpaceSpec:
    family: str
    ring: bool
    r: int
    k: int
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def trimmed(self):
        return self.family == "Pminus"

    def with_(self, **kw):
        d = dict(family=self.family, ring=self.ring, r=self.r, k=self.k, n=self.n)
        d.update(kw)
        return SpaceSpec(**d)

    def label(self):
        fam = "P-" if self.trimmed else "P"
        ring = "ring " if self.ring else ""
        return f"{ring}{fam}_{self.r} L^{self.k} (n={self.n})"

    def to_json(self):
        return {"family": self.family, "ring": self.ring, "r": self.r, "k": self.k, "n": self.n}

    @classmethod
    def from_json(cls, data):
        return cls(data["family"], bool(data["ring"]), data["r"], data["k"], data["n"])


class FormSet:
    """An ordered list of forms sharing ``(n, k)``.

    Elements are :class:`Form` or :class:`WhitneyForm`; ``labels`` carries an
    optional description per element (index data or provenance).
    """

    def __init__(self, n, k, elements=(), labels=None):
        self.n = n
        self.k = k
        self.elements = list(elements)
        for e in self.elements:
            if e.n != n or e.k != k:
                raise MixedSpace(f"element on (n, k) = ({e.n}, {e.k}) in a set on ({n}, {k})")
        self.labels = list(labels) if labels is not None else [None] * len(self.elements)
        if len(self.labels) != len(self.elements):
            raise ValueError("one label per element")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def forms(self):
        return [e.to_form() for e in self.elements]

    def degree(self):
        return max((e.to_form().degree() for e in self.elements), default=0)

    def coordinate_rows(self):
        return coordinate_rows(self.forms())

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "elements": [e.to_form().to_json() for e in self.elements],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], data["k"], [Form.from_json(e) for e in data["elements"]])

    def __repr__(self):
        return f"FormSet(n={self.n}, k={self.k}, {len(self)} elements)"


def coordinate_rows(forms, degree=None):
    """Sparse integer-indexed rows of homogeneous coordinates at a common degree."""
    forms = [f.to_form() for f in forms]
    if degree is None:
        degree = max((f.degree() for f in forms), default=0)
    return index_rows([coordinates(f, degree) for f in forms])


def _coord_key(form):
    return frozenset(coordinates(form).items())


def _dedupe(elements, labels):
    seen = set()
    out_e, out_l = [], []
    for e, lab in zip(elements, labels):
        key = (e.to_form().degree(), _coord_key(e))
        if key in seen:
            continue
        seen.add(key)
        out_e.append(e)
        out_l.append(lab)
    return out_e, out_l


def _monomial(n, alpha, sigma):
    return Form._wrap(n, len(sigma), {(alpha, sigma): ONE})


def _whitney_monomial(n, alpha, rho):
    return WhitneyForm._wrap(n, len(rho) - 1, {(alpha, rho): ONE})


def _support(alpha):
    return {i for i, a in enumerate(alpha) if a}


def _generators(spec, condition):
    n, k, r = spec.n, spec.k, spec.r
    full = set(range(n + 1))
    elements, labels = [], []
    if spec.trimmed:
        if r < 1:
            return elements, labels
        for alpha in enum_multiindices(r - 1, n):
            for rho in sigma0_set(k, n):
                if spec.ring and _support(alpha) | set(rho) != full:
                    continue
                if condition is not None and not condition(alpha, rho):
                    continue
                elements.append(_whitney_monomial(n, alpha, rho))
                labels.append(("phi", alpha, rho))
    else:
        if r < 0:
            return elements, labels
        for alpha in enum_multiindices(r, n):
            for sigma in sigma_set(k, n):
                if spec.ring and _support(alpha) | set(sigma) != full:
                    continue
                if condition is not None and not condition(alpha, sigma):
                    continue
                elements.append(_monomial(n, alpha, sigma))
                labels.append(("dl", alpha, sigma))
    return elements, labels


def spanning_set(spec, dedupe=True):
    """The canonical spanning set; equal generators are listed once.

    With ``dedupe=False`` the full indexed family of generators is returned,
    coincident forms included.
    """
    elements, labels = _generators(spec, None)
    if dedupe:
        elements, labels = _dedupe(elements, labels)
    return FormSet(spec.n, spec.k, elements, labels)


def _floor_not_in(alpha, sigma):
    return multiindex_floor(alpha) not in sigma


def _floor_ge(alpha, rho):
    return multiindex_floor(alpha) >= floor_index(rho)


def _floor_is_zero(alpha, rho):
    return floor_index(rho) == 0


def basis_B(spec):
    """The canonical basis with its index side conditions.

    For the plain full family at ``r = 0`` the spanning set is dependent
    (the differentials sum to zero); the constant forms ``dlambda_sigma``
    with ``0`` not in ``sigma`` are used instead.
    """
    if spec.r < 0:
        raise UnsupportedDegree(f"negative degree r={spec.r}")
    if spec.trimmed:
        cond = _floor_is_zero if spec.ring else _floor_ge
    elif spec.r == 0 and not spec.ring:
        def cond(alpha, sigma):
            return 0 not in sigma
    else:
        cond = _floor_not_in
    elements, labels = _generators(spec, cond)
    return FormSet(spec.n, spec.k, elements, labels)


def ring_factorization(alpha, sigma, n):
    """Split ``lambda^alpha dlambda_sigma`` as ``lambda^beta lambda_{sigma^c} dlambda_sigma``.

    Returns ``beta`` or None when ``sigma^c`` is not inside the support.
    """
    sc = complement(sigma, n)
    beta = list(alpha)
    for i in sc:
        if beta[i] == 0:
            return None
        beta[i] -= 1
    return tuple(beta)


def rank_dim(formset):
    """``(rank, independent)`` for a FormSet or a list of forms."""
    elements = list(formset)
    if elements:
        n, k = elements[0].n, elements[0].k
        for e in elements:
            if (e.n, e.k) != (n, k):
                raise MixedSpace("elements live in different spaces")
    rows, ncols = coordinate_rows(elements)
    rk = rank(rows, ncols)
    return rk, rk == len(elements)


def independent(elements):
    rows, ncols = coordinate_rows(list(elements))
    return is_independent(rows, ncols)


@lru_cache(maxsize=None)
def dimension(spec):
    """Exact dimension, the rank of the canonical spanning set."""
    s = spanning_set(spec)
    if not len(s):
        return 0
    rows, ncols = s.coordinate_rows()
    return exact_rank(rows, ncols)


def contains(spec, form):
    """Membership in the span of the canonical spanning set."""
    form = form.to_form()
    if (form.n, form.k) != (spec.n, spec.k):
        raise MixedSpace(f"form on (n, k) = ({form.n}, {form.k}) tested against {spec.label()}")
    if not form:
        return True
    s = spanning_set(spec)
    if not len(s):
        return False
    forms = s.forms() + [form]
    degree = max(f.degree() for f in forms)
    rows, _ = coordinate_rows(forms, degree)
    e = Echelon()
    for row in rows[:-1]:
        e.insert(row)
    return e.contains(rows[-1])


def has_vanishing_traces(form):
    """True iff every trace onto a proper face vanishes."""
    form = form.to_form()
    n = form.n
    for m in range(n):
        for f in faces(n, m):
            t = trace(form, f)
            if t and coordinates(t):
                return False
    return True

