"""Extension of ring forms from a face to the whole simplex.

``ext_minus`` transports Whitney data ``lambda^alpha phi_rho`` through the face
inclusion.  ``ext_full`` sends ``lambda^alpha dlambda_sigma`` (homogeneous of
degree ``r >= 1``) to ``lambda^alpha~ Psi_sigma~`` where

    Psi_i = dlambda_i - (alpha~_i / r) * sum_{j in face} dlambda_j

and the wedge of the Psi factors is expanded into ordinary terms.  Both are
right inverses of the trace onto the face and vanish on every face that does
not contain it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import inverse, sort_with_sign
from .errors import NotAFace, RankDeficient, UnsupportedDegree, WrongSpace, ZeroDegree
from .forms import Face, Form, WhitneyForm, _add_into, faces, homogenize
from .isomorphisms import _homogenize_whitney, _whitney_of
from .linalg import rank
from .spaces import FormSet, SpaceSpec, basis_B, coordinate_rows, dimension

__all__ = [
    "ext_minus",
    "ext_full",
    "extend",
    "relocated_face",
    "DecompositionPlan",
    "geometric_decomposition",
]


def _check(face, omega):
    if not isinstance(face, Face):
        raise NotAFace(f"{face!r} is not a Face")
    if omega.n != face.dim:
        raise WrongSpace(f"form on the {omega.n}-simplex extended from a {face.dim}-face")


def _lift_alpha(alpha, iota, n):
    out = [0] * (n + 1)
    for j, a in enumerate(alpha):
        out[iota[j]] = a
    return tuple(out)


def ext_minus(face, omega, r):
    """Extend a ring trimmed form of degree ``r`` from ``face`` to the simplex."""
    _check(face, omega)
    n, iota = face.n, face.inclusion
    if face.dim == n:
        return omega
    if not isinstance(omega, WhitneyForm):
        omega = _whitney_of(omega.to_form(), SpaceSpec("Pminus", True, r, omega.k, omega.n))
    w = _homogenize_whitney(omega, r - 1)
    out = {}
    for (alpha, rho), c in w.terms.items():
        _add_into(out, (_lift_alpha(alpha, iota, n), tuple(iota[i] for i in rho)), c)
    return WhitneyForm._wrap(n, omega.k, out)


def ext_full(face, omega, r):
    """Extend a ring full-family form of degree ``r >= 1`` from ``face``."""
    _check(face, omega)
    n, iota = face.n, face.inclusion
    if face.dim == n:
        return omega
    omega = omega.to_form()
    if r < 1:
        raise ZeroDegree("the Psi factors need |alpha| = r > 0")
    out = {}
    for (alpha, sigma), c in homogenize(omega, r).terms.items():
        at = _lift_alpha(alpha, iota, n)
        st = tuple(iota[i] for i in sigma)
        _add_into(out, (at, st), c)
        # Psi_{s_1} ^ ... ^ Psi_{s_k}; S ^ S = 0 leaves one replaced slot at a time
        for p, i in enumerate(st):
            if not at[i]:
                continue
            w = c * Fraction(-at[i], r)
            for j in iota:
                idx = st[:p] + (j,) + st[p + 1:]
                merged, sign = sort_with_sign(idx) if len(set(idx)) == len(idx) else (None, 0)
                if sign:
                    _add_into(out, (at, merged), w if sign > 0 else -w)
    return Form._wrap(n, omega.k, out)


def extend(spec, face, omega):
    """``ext_minus`` or ``ext_full`` according to ``spec.family``."""
    if spec.trimmed:
        return ext_minus(face, omega, spec.r)
    return ext_full(face, omega, spec.r)


def relocated_face(face, pi):
    """``(G, mu)`` with ``pullback(ext_G(w), pi) == ext_face(pullback(w, mu))``.

    ``G`` is the face mapped onto ``face`` by the relabelling ``pi`` and
    ``mu`` is the induced permutation of local vertex indices.
    """
    pinv = inverse(pi)
    g = Face(face.n, sorted(pinv[v] for v in face.inclusion))
    pos = {v: j for j, v in enumerate(face.inclusion)}
    mu = tuple(pos[pi[v]] for v in g.inclusion)
    return g, mu


@dataclass
class DecompositionPlan:
    spec: SpaceSpec
    entries: list = field(default_factory=list)
    total_rank: int = 0

    def union(self):
        out = []
        for _, _, ext in self.entries:
            out.extend(ext.elements)
        return FormSet(self.spec.n, self.spec.k, out)

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "faces": [
                {"vertices": list(f.inclusion), "count": len(ext)} for f, _, ext in self.entries
            ],
            "total_rank": self.total_rank,
        }


def _default_provider(spec):
    def provider(m):
        return basis_B(spec.with_(ring=True, n=m))

    return provider


def geometric_decomposition(spec, face_bases=None):
    """Assemble a basis of ``spec`` from ring bases on all faces.

    ``face_bases(m)`` returns a ring basis on the reference ``m``-simplex; the
    same local basis is used on every ``m``-face, which is the transport of the
    basis on the first face along the order preserving relabellings.
    """
    if spec.r < 1:
        raise UnsupportedDegree(f"decomposition needs r >= 1, got r={spec.r}")
    provider = face_bases or _default_provider(spec)
    plan = DecompositionPlan(spec.with_(ring=False))
    for m in range(spec.k, spec.n + 1):
        local = provider(m)
        if not len(local):
            continue
        for f in faces(spec.n, m):
            ext = FormSet(spec.n, spec.k, [extend(spec, f, w) for w in local])
            plan.entries.append((f, local, ext))
    union = plan.union()
    expected = dimension(plan.spec)
    rows, ncols = coordinate_rows(union.elements)
    rk = rank(rows, ncols) if rows else 0
    if rk != len(union) or rk != expected:
        raise RankDeficient(
            f"{spec.label()}: union of {len(union)} extended forms has rank {rk}, dimension {expected}"
        )
    plan.total_rank = rk
    return plan

