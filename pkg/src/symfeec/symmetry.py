"""Vertex permutations acting on forms, and invariance certificates.

``pullback(omega, pi)`` transports a form along the simplex automorphism
induced by ``pi``: ``lambda_i -> lambda_{pi(i)}`` and
``dlambda_i -> dlambda_{pi(i)}``.  It is a right action,
``pullback(w, compose(p, q)) == pullback(pullback(w, q), p)``.

A set is invariant over a field K when each generator maps every element to
a nonzero K-multiple of some element, bijectively.  The witness data (the
matching permutation ``tau`` and the multipliers ``chi``) form an
:class:`InvarianceCertificate` that :func:`verify_certificate` re-checks
without any search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .combinatorics import all_permutations, generators, is_permutation, sort_with_sign
from .errors import AmbiguousSet, NotInvariant, RangeMismatch
from .forms import _add_into, coordinates
from .scalar import Cyclo

__all__ = [
    "pullback",
    "InvarianceCertificate",
    "check_invariance",
    "verify_certificate",
    "obstruction_order",
    "classify",
    "generated_group_ok",
]


def _permute_alpha(alpha, pi):
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        if a:
            out[pi[i]] = a
    return tuple(out)


def pullback(form, pi):
    """Pull a Form or WhitneyForm back along the symmetry induced by ``pi``."""
    pi = tuple(pi)
    if not is_permutation(pi, form.n):
        raise RangeMismatch(f"{pi} is not a permutation of [0:{form.n}]")
    out = {}
    for (alpha, idx), c in form.terms.items():
        merged, sign = sort_with_sign(tuple(pi[i] for i in idx))
        _add_into(out, (_permute_alpha(alpha, pi), merged), c if sign > 0 else -c)
    return type(form)._wrap(form.n, form.k, out)


@dataclass
class InvarianceCertificate:
    """Per-generator matching ``pullback(w_i, g) = chi_i * w_{tau(i)}``."""

    generators: list
    taus: list
    chis: list
    real: bool = field(default=False)

    def to_json(self):
        return {
            "generators": [list(g) for g in self.generators],
            "matches": [
                {"tau": list(tau), "chi": [c.to_json() for c in chi]}
                for tau, chi in zip(self.taus, self.chis)
            ],
            "real": self.real,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            generators=[tuple(g) for g in data["generators"]],
            taus=[list(m["tau"]) for m in data["matches"]],
            chis=[[Cyclo.from_json(c) for c in m["chi"]] for m in data["matches"]],
            real=bool(data["real"]),
        )

    def all_unitary(self):
        """Whether every multiplier has modulus one."""
        return all((c * c.conjugate()) == 1 for chi in self.chis for c in chi)


def _elements(q):
    return list(q.elements) if hasattr(q, "elements") else list(q)


def _normal_key(coords):
    pivot = min(coords)
    inv = coords[pivot].inverse()
    return pivot, frozenset((key, c * inv) for key, c in coords.items())


def _set_degree(elements):
    return max((e.to_form().degree() for e in elements), default=0)


def check_invariance(q, mode="C", gens=None, strict=True, full_group=False):
    """Search for an invariance certificate of the set ``q``.

    ``mode`` is ``"R"`` (all multipliers real) or ``"C"``.  ``gens`` defaults
    to the pair ``(0 1)``, ``(0 1 ... n)``; ``full_group`` uses every
    permutation instead.  With ``strict=False`` proportional elements are
    grouped and matched class by class instead of being rejected.
    """
    if mode not in ("R", "C"):
        raise ValueError(f"mode must be 'R' or 'C', got {mode!r}")
    elements = _elements(q)
    if not elements:
        n = getattr(q, "n", 0)
        g = all_permutations(n) if full_group else (gens or generators(n))
        return InvarianceCertificate([tuple(x) for x in g], [[] for _ in g], [[] for _ in g], True)
    n = elements[0].n
    if gens is None:
        gens = all_permutations(n) if full_group else generators(n)
    gens = [tuple(g) for g in gens]
    degree = _set_degree(elements)

    classes = {}
    pivots = []
    coords = []
    for i, e in enumerate(elements):
        c = coordinates(e.to_form(), degree)
        if not c:
            raise AmbiguousSet(f"element {i} is the zero form")
        pivot, key = _normal_key(c)
        coords.append(c)
        pivots.append(pivot)
        classes.setdefault(key, []).append(i)
    if strict:
        for members in classes.values():
            if len(members) > 1:
                raise AmbiguousSet(f"elements {members} are proportional")

    taus, chis = [], []
    all_real = True
    for g in gens:
        pools = {key: list(members) for key, members in classes.items()}
        tau = [None] * len(elements)
        chi = [None] * len(elements)
        for i, e in enumerate(elements):
            pc = coordinates(pullback(e, g).to_form(), degree)
            if not pc:
                raise NotInvariant(f"generator {g} annihilates element {i}", g, i)
            _, key = _normal_key(pc)
            pool = pools.get(key)
            if not pool:
                raise NotInvariant(
                    f"generator {g} maps element {i} outside the set", g, i
                )
            j = pool.pop(0)
            pj = pivots[j]
            x = pc[pj] / coords[j][pj]
            if mode == "R" and not x.is_real():
                raise NotInvariant(
                    f"generator {g} maps element {i} to a non-real multiple ({x}) of element {j}",
                    g,
                    i,
                )
            all_real = all_real and x.is_real()
            tau[i] = j
            chi[i] = x
        taus.append(tau)
        chis.append(chi)
    return InvarianceCertificate(gens, taus, chis, all_real)


def verify_certificate(q, cert, explain=False):
    """Re-check a certificate exactly; no search is performed."""

    def result(ok, msg=""):
        return (ok, msg) if explain else ok

    elements = _elements(q)
    m = len(elements)
    if len(cert.taus) != len(cert.generators) or len(cert.chis) != len(cert.generators):
        return result(False, "one match per generator required")
    degree = _set_degree(elements)
    base = [coordinates(e.to_form(), degree) for e in elements]
    real = True
    for g, tau, chi in zip(cert.generators, cert.taus, cert.chis):
        if sorted(tau) != list(range(m)) or len(chi) != m:
            return result(False, f"generator {g}: tau is not a permutation of the set")
        for i in range(m):
            x = chi[i]
            if not x:
                return result(False, f"generator {g}: chi[{i}] is zero")
            real = real and x.is_real()
            lhs = coordinates(pullback(elements[i], g).to_form(), degree)
            j = tau[i]
            rhs = {key: x * c for key, c in base[j].items()}
            if lhs != rhs:
                return result(False, f"generator {g}: pullback of element {i} != chi * element {j}")
    if cert.real != real:
        return result(False, "real flag does not match the multipliers")
    return result(True, "ok")


def generated_group_ok(gens, n):
    """Whether ``gens`` generate all of Perm(0:n) (closure by BFS)."""
    ident = tuple(range(n + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen) == factorial(n + 1)


def obstruction_order(d, n):
    """(|Perm(0:n)|, order of the d x d signed permutation group, divides?)."""
    group = factorial(n + 1)
    signed = (2 ** d) * factorial(d)
    return group, signed, signed % group == 0


def classify(q, gens=None):
    """``("R" | "C_only" | "none", certificate or None)``."""
    try:
        cert = check_invariance(q, "C", gens=gens)
    except NotInvariant:
        return "none", None
    return ("R" if cert.real else "C_only"), cert

