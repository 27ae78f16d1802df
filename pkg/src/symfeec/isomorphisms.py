"""The canonical isomorphisms between plain spaces and spaces with vanishing traces.

``I_{k,r}`` maps ``P_r L^k`` onto ring ``P-_{r+k+1} L^{n-k}``::

    lambda^alpha dlambda_sigma  ->  eps(sigma, sigma^c) lambda^alpha lambda_sigma phi_{sigma^c}

``J_{k,r}`` maps ring ``P_{r+n-k+1} L^k`` onto ``P-_{r+1} L^{n-k}``::

    lambda^alpha lambda_{sigma^c} dlambda_sigma  ->  eps(sigma, sigma^c) lambda^alpha phi_{sigma^c}

Index bookkeeping used by the recursive construction (target space on the
left, the isomorphism producing it on the right)::

    ring P-_r L^k   =  I_{n-k, r-n+k-1}  applied to  P_{r-n+k-1} L^{n-k}
    ring P_r  L^k   =  J_{k, r-n+k-1}^-1 applied to  P-_{r-n+k} L^{n-k}
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import complement, eps_split
from .errors import SolveFailed, WrongSpace
from .forms import Form, WhitneyForm, _add_into, _multinomial_powers, coordinates, homogenize
from .linalg import ColumnIndex, Echelon
from .spaces import SpaceSpec, basis_B, ring_factorization

__all__ = ["IsoSpec", "iso_I", "iso_J", "iso_inverse", "apply", "image_set"]


@dataclass(frozen=True)
class IsoSpec:
    which: str
    k: int
    r: int
    n: int
    direction: str = "forward"

    def __post_init__(self):
        if self.which not in ("I", "J"):
            raise ValueError(f"which must be 'I' or 'J', got {self.which!r}")
        if self.direction not in ("forward", "inverse"):
            raise ValueError(f"direction must be 'forward' or 'inverse', got {self.direction!r}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    def _forward_domain(self):
        n, k, r = self.n, self.k, self.r
        if self.which == "I":
            return SpaceSpec("P", False, r, k, n)
        return SpaceSpec("P", True, r + n - k + 1, k, n)

    def _forward_codomain(self):
        n, k, r = self.n, self.k, self.r
        if self.which == "I":
            return SpaceSpec("Pminus", True, r + k + 1, n - k, n)
        return SpaceSpec("Pminus", False, r + 1, n - k, n)

    def domain(self):
        return self._forward_domain() if self.direction == "forward" else self._forward_codomain()

    def codomain(self):
        return self._forward_codomain() if self.direction == "forward" else self._forward_domain()

    def inverse(self):
        other = "inverse" if self.direction == "forward" else "forward"
        return IsoSpec(self.which, self.k, self.r, self.n, other)

    @classmethod
    def onto_ring_trimmed(cls, r, k, n):
        """The forward I whose image is ring P-_r L^k."""
        return cls("I", n - k, r - n + k - 1, n)

    @classmethod
    def onto_ring_full(cls, r, k, n):
        """The inverse J whose image is ring P_r L^k."""
        return cls("J", k, r - n + k - 1, n, "inverse")


def _check_input(spec, omega):
    dom = spec.domain()
    if omega.n != dom.n or omega.k != dom.k:
        raise WrongSpace(
            f"form on (n, k) = ({omega.n}, {omega.k}) given to a map defined on {dom.label()}"
        )
    deg = omega.degree()
    if omega and deg > dom.r:
        raise WrongSpace(f"form of degree {deg} exceeds the domain {dom.label()}")
    return dom


def _homogenize_whitney(w, degree):
    """Lift every ``lambda^alpha phi_rho`` to ``|alpha| = degree``."""
    out = {}
    n = w.n
    for (alpha, rho), c in w.terms.items():
        e = degree - sum(alpha)
        if e < 0:
            raise WrongSpace(f"Whitney term of degree {sum(alpha) + 1} exceeds {degree + 1}")
        if e == 0:
            _add_into(out, (alpha, rho), c)
            continue
        for gamma, m in _multinomial_powers(e, n, 0):
            _add_into(out, (tuple(x + y for x, y in zip(alpha, gamma)), rho), c * m)
    return WhitneyForm._wrap(n, w.k, out)


def _apply_I_terms(form, n):
    out = {}
    for (alpha, sigma), c in form.terms.items():
        sc = complement(sigma, n)
        s = eps_split(sigma, sc)
        beta = list(alpha)
        for i in sigma:
            beta[i] += 1
        _add_into(out, (tuple(beta), sc), c if s > 0 else -c)
    return WhitneyForm._wrap(n, n - form.k, out)


def iso_I(spec, omega):
    """Forward I on a form of ``P_r L^k`` (returned in Whitney representation)."""
    if spec.which != "I" or spec.direction != "forward":
        raise WrongSpace(f"iso_I needs a forward I spec, got {spec}")
    omega = omega.to_form()
    _check_input(spec, omega)
    return _apply_I_terms(homogenize(omega, spec.r), spec.n)


def _J_of_basis_element(alpha, sigma, n):
    beta = ring_factorization(alpha, sigma, n)
    if beta is None:
        raise SolveFailed(f"lambda^{alpha} dlambda_{sigma} is not a ring generator")
    sc = complement(sigma, n)
    s = eps_split(sigma, sc)
    return beta, sc, s


class _Solver:
    """Echelon form of a fixed list of forms, reused across solves."""

    def __init__(self, forms, degree):
        self.degree = degree
        self.cols = ColumnIndex()
        self.echelon = Echelon()
        for i, f in enumerate(forms):
            self.echelon.insert(self.cols.row(coordinates(f, degree)), tag=i)

    def solve(self, target):
        known = {}
        for key, c in coordinates(target, self.degree).items():
            j = self.cols._ids.get(key)
            if j is None:
                raise SolveFailed("target has a coordinate outside the span")
            known[j] = c
        return self.echelon.solve(known)


@lru_cache(maxsize=256)
def _basis_solver(spec):
    return _Solver(basis_B(spec).forms(), spec.r)


@lru_cache(maxsize=256)
def _I_image_solver(spec):
    src = basis_B(spec)
    images = [_apply_I_terms(b.to_form(), spec.n).to_form() for b in src]
    return _Solver(images, spec.r + spec.k + 1)


def iso_J(spec, omega, method="solve"):
    """Forward J on a form of ring ``P_{r+n-k+1} L^k`` (Whitney representation out).

    ``method="solve"`` expresses ``omega`` in the canonical ring basis first;
    ``method="termwise"`` requires every homogeneous term to be a ring
    generator already.
    """
    if spec.which != "J" or spec.direction != "forward":
        raise WrongSpace(f"iso_J needs a forward J spec, got {spec}")
    omega = omega.to_form()
    dom = _check_input(spec, omega)
    n = spec.n
    out = {}
    if method == "termwise":
        for (alpha, sigma), c in homogenize(omega, dom.r).terms.items():
            beta, sc, s = _J_of_basis_element(alpha, sigma, n)
            _add_into(out, (beta, sc), c if s > 0 else -c)
        return WhitneyForm._wrap(n, n - spec.k, out)
    if not omega:
        return WhitneyForm._wrap(n, n - spec.k, out)
    basis = basis_B(dom)
    coeffs = _basis_solver(dom).solve(omega)
    for i, c in coeffs.items():
        (alpha, sigma), = basis[i].terms
        beta, sc, s = _J_of_basis_element(alpha, sigma, n)
        _add_into(out, (beta, sc), c if s > 0 else -c)
    return WhitneyForm._wrap(n, n - spec.k, out)


def _whitney_of(form, spec_space):
    """Whitney representation of a trimmed-space form via the canonical basis."""
    basis = basis_B(spec_space)
    coeffs = _basis_solver(spec_space).solve(form)
    out = {}
    for i, c in coeffs.items():
        for key, v in basis[i].terms.items():
            _add_into(out, key, c * v)
    return WhitneyForm._wrap(form.n, form.k, out)


def iso_inverse(spec, omega):
    """I^-1 (by exact solve) or J^-1 (termwise on the Whitney representation)."""
    if spec.direction != "inverse":
        raise WrongSpace(f"iso_inverse needs an inverse spec, got {spec}")
    n = spec.n
    dom = spec.domain()
    if spec.which == "J":
        if omega.n != dom.n or omega.k != dom.k:
            raise WrongSpace(f"form on (n, k) = ({omega.n}, {omega.k}) not in {dom.label()}")
        w = omega if isinstance(omega, WhitneyForm) else _whitney_of(omega.to_form(), dom)
        w = _homogenize_whitney(w, dom.r - 1)
        out = {}
        for (alpha, rho), c in w.terms.items():
            rc = complement(rho, n)
            s = eps_split(rc, rho)
            beta = list(alpha)
            for i in rho:
                beta[i] += 1
            _add_into(out, (tuple(beta), rc), c if s > 0 else -c)
        return Form._wrap(n, n - dom.k, out)
    omega = omega.to_form()
    if omega.n != dom.n or omega.k != dom.k:
        raise WrongSpace(f"form on (n, k) = ({omega.n}, {omega.k}) not in {dom.label()}")
    if not omega:
        return Form._wrap(n, spec.k, {})
    src = basis_B(spec.codomain())
    coeffs = _I_image_solver(spec.codomain()).solve(omega)
    out = {}
    for i, c in coeffs.items():
        for key, v in src[i].terms.items():
            _add_into(out, key, c * v)
    return Form._wrap(n, spec.k, out)


def apply(spec, omega):
    """Dispatch on ``spec``."""
    if spec.direction == "inverse":
        return iso_inverse(spec, omega)
    if spec.which == "I":
        return iso_I(spec, omega)
    return iso_J(spec, omega)


def image_set(spec, elements):
    return [apply(spec, e) for e in elements]

