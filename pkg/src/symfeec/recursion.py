"""Recursive construction of invariant bases and their degree tables.

Ring spaces come from plain spaces of complementary form degree through the
canonical isomorphisms; plain spaces of degree ``r >= 1`` are unions of ring
bases extended from every face; plain full spaces of degree 0 come from the
catalog of constant bases.  Every element carries a provenance tree that
:func:`replay` re-evaluates from scratch.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import generators
from .errors import NotInvariant, NotMonomial, RankDeficient
from .extension import extend
from .forms import Face, Form, dlambda, faces, wedge
from .isomorphisms import IsoSpec, apply
from .linalg import is_independent
from .scalar import I, ONE, XI3
from .spaces import FormSet, SpaceSpec, coordinate_rows, dimension
from .symmetry import InvarianceCertificate, check_invariance, pullback

__all__ = [
    "BaseCatalogEntry",
    "base_constant_basis",
    "ABasisResult",
    "build_A_basis",
    "replay",
    "predict_R_invariance",
    "classify_basis",
    "agrees",
    "degree_table",
    "max_degree",
]


# -- constant bases --------------------------------------------------------------

@dataclass
class BaseCatalogEntry:
    n: int
    k: int
    basis: FormSet
    mode: str
    certificate: InvarianceCertificate = None
    names: list = field(default_factory=list)


def _psi(n):
    d = [dlambda(n, i) for i in range(n + 1)]
    w = d[0] - d[1] + d[2] - d[3]
    p = d[0] + d[1] - d[2] - d[3]
    k = d[0] - d[1] - d[2] + d[3]
    return w, p, k


def _zeta_forms():
    def d(i, j):
        return dlambda(4, i, j)

    z0 = (
        d(0, 1) + d(0, 2) * I - d(0, 3) * I - d(0, 4) + d(1, 2)
        + d(1, 3) * I - d(1, 4) * I + d(2, 3) + d(2, 4) * I + d(3, 4)
    )
    tau = (1, 0, 2, 3, 4)
    kappa = (1, 2, 3, 4, 0)
    zs = [z0, pullback(z0, tau)]
    for _ in range(4):
        zs.append(pullback(zs[-1], kappa))
    return zs


def _catalog(n, k):
    if k == 0:
        return [Form._wrap(n, 0, {((0,) * (n + 1), ()): ONE})], ["1"], "R"
    if k == n:
        return [dlambda(n, *range(1, n + 1))], ["dl_1..n"], "R"
    if (n, k) == (2, 1):
        d = [dlambda(2, i) for i in range(3)]
        x2 = XI3 * XI3
        return [d[0] + d[1] * XI3 + d[2] * x2, d[0] + d[1] * x2 + d[2] * XI3], ["phi0", "phi1"], "C"
    if (n, k) == (3, 1):
        return list(_psi(3)), ["psi_w", "psi_p", "psi_k"], "R"
    if (n, k) == (3, 2):
        w, p, kk = _psi(3)
        return [wedge(w, p), wedge(w, kk), wedge(p, kk)], ["psi_wp", "psi_wk", "psi_pk"], "R"
    if (n, k) == (4, 2):
        return _zeta_forms(), [f"zeta{j}" for j in range(6)], "C"
    return None


def _has_base(n, k):
    return k in (0, n) or (n, k) in ((2, 1), (3, 1), (3, 2), (4, 2))


@lru_cache(maxsize=None)
def base_constant_basis(n, k):
    """The catalogued invariant basis of constant k-forms, re-verified here."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    found = _catalog(n, k)
    if found is None:
        raise NotMonomial(
            f"constant {k}-forms on the {n}-simplex have no monomial basis", n=n, k=k
        )
    forms, names, mode = found
    basis = FormSet(n, k, forms, names)
    dim = dimension(SpaceSpec("P", False, 0, k, n))
    rows, ncols = coordinate_rows(forms)
    if len(forms) != dim or not is_independent(rows, ncols):
        raise RankDeficient(f"catalog entry ({n}, {k}) is not a basis")
    cert = check_invariance(basis, mode)
    if mode == "C" and cert.real:
        mode = "R"
    return BaseCatalogEntry(n, k, basis, mode, cert, names)


# -- provenance ------------------------------------------------------------------

def _iso_node(iso, child):
    return {
        "op": "iso",
        "which": iso.which,
        "k": iso.k,
        "r": iso.r,
        "n": iso.n,
        "direction": iso.direction,
        "child": child,
    }


def replay(node):
    """Recompute an element from its provenance tree."""
    op = node["op"]
    if op == "base":
        return base_constant_basis(node["n"], node["k"]).basis[node["index"]]
    if op == "iso":
        iso = IsoSpec(node["which"], node["k"], node["r"], node["n"], node["direction"])
        return apply(iso, replay(node["child"]))
    if op == "ext":
        spec = SpaceSpec.from_json(node["spec"])
        return extend(spec, Face(spec.n, node["face"]), replay(node["child"]))
    raise ValueError(f"unknown provenance op {op!r}")


# -- the recursion ---------------------------------------------------------------

def _route(spec):
    """``(kind, payload)`` naming how ``spec`` is produced."""
    n, k, r = spec.n, spec.k, spec.r
    if spec.ring:
        if spec.trimmed:
            rr = r - n + k - 1
            if rr < 0:
                return "empty", None
            return "iso", (IsoSpec.onto_ring_trimmed(r, k, n), SpaceSpec("P", False, rr, n - k, n))
        rr = r - n + k
        if rr <= 0:
            return "empty", None
        return "iso", (IsoSpec.onto_ring_full(r, k, n), SpaceSpec("Pminus", False, rr, n - k, n))
    if r < 0 or (spec.trimmed and r == 0):
        return "empty", None
    if r == 0:
        return "base", (n, k)
    return "faces", [spec.with_(ring=True, n=m) for m in range(k, n + 1)]


def _preflight(spec, chain, ok):
    if spec in ok:
        return
    kind, payload = _route(spec)
    chain = chain + [spec]
    if kind == "base" and not _has_base(*payload):
        n, k = payload
        path = " -> ".join(s.label() for s in chain)
        raise NotMonomial(
            f"{spec.label()} needs a monomial basis of constant {k}-forms on the {n}-simplex,"
            f" which does not exist (chain: {path})",
            n=n,
            k=k,
            chain=tuple(chain),
        )
    if kind == "iso":
        _preflight(payload[1], chain, ok)
    elif kind == "faces":
        for sub in payload:
            _preflight(sub, chain, ok)
    ok.add(spec)


_MEMO = {}


def _check_node(spec, elements):
    dim = dimension(spec)
    if len(elements) != dim:
        raise RankDeficient(f"{spec.label()}: built {len(elements)} elements, dimension {dim}")
    if elements:
        rows, ncols = coordinate_rows(elements)
        if not is_independent(rows, ncols):
            raise RankDeficient(f"{spec.label()}: built elements are dependent")


def _build(spec):
    hit = _MEMO.get(spec)
    if hit is not None:
        return hit
    kind, payload = _route(spec)
    elements, prov = [], []
    if kind == "base":
        entry = base_constant_basis(*payload)
        elements = list(entry.basis)
        prov = [{"op": "base", "n": spec.n, "k": spec.k, "index": i} for i in range(len(elements))]
    elif kind == "iso":
        iso, sub = payload
        sub_el, sub_prov = _build(sub)
        elements = [apply(iso, e) for e in sub_el]
        prov = [_iso_node(iso, p) for p in sub_prov]
    elif kind == "faces":
        for local in payload:
            loc_el, loc_prov = _build(local)
            for f in faces(spec.n, local.n):
                for e, p in zip(loc_el, loc_prov):
                    elements.append(extend(spec, f, e))
                    prov.append(
                        p if f.dim == spec.n else
                        {"op": "ext", "spec": spec.to_json(), "face": list(f.inclusion), "child": p}
                    )
    _check_node(spec, elements)
    _MEMO[spec] = (elements, prov)
    return elements, prov


@dataclass
class ABasisResult:
    spec: SpaceSpec
    basis: FormSet
    provenance: list
    classification: str = None
    certificate: InvarianceCertificate = None

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "size": len(self.basis),
            "elements": [e.to_form().to_json() for e in self.basis],
            "provenance": self.provenance,
            "classification": self.classification,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }

    @classmethod
    def from_json(cls, data):
        spec = SpaceSpec.from_json(data["spec"])
        basis = FormSet(spec.n, spec.k, [Form.from_json(e) for e in data["elements"]])
        cert = data.get("certificate")
        return cls(
            spec,
            basis,
            data["provenance"],
            data.get("classification"),
            InvarianceCertificate.from_json(cert) if cert else None,
        )


def build_A_basis(spec, classify=True):
    """Construct the recursive basis of ``spec`` (optionally classified)."""
    _preflight(spec, [], set())
    elements, prov = _build(spec)
    result = ABasisResult(spec, FormSet(spec.n, spec.k, elements), prov)
    if classify:
        result.classification, result.certificate = classify_basis(result)
    return result


def classify_basis(result, gens=None):
    """``("R" | "C_only" | "none", certificate)``.

    The elements are pairwise non-proportional, so the matching of each
    element is forced and one complex search settles the real question too.
    """
    q = result.basis
    try:
        cert = check_invariance(q, "C", gens=gens or generators(q.n))
    except NotInvariant:
        return "none", None
    return ("R" if cert.real else "C_only"), cert


# -- degree tables ---------------------------------------------------------------

_TET_PLAIN = {
    ("P", 1): {0, 1, 2, 4, 5, 8},
    ("Pminus", 1): {0, 1, 3, 4, 7},
    ("P", 2): {1, 2, 4, 5, 8},
    ("Pminus", 2): {2, 3, 4, 6, 7, 10},
}
_TET_RING = {
    ("P", 1): {0, 1, 2, 4, 5, 8},
    ("Pminus", 1): {0, 1, 3, 4, 7},
    ("P", 2): {0, 1, 2, 4, 5, 8},
    ("Pminus", 2): {0, 1, 2, 3, 4, 6, 7, 10},
}


def predict_R_invariance(spec):
    """The stated verdict: ``"R"``, ``"C_only"``, ``"C"`` or ``"unsupported"``.

    ``"C"`` means complex invariance is claimed while the real question is
    left open.
    """
    n, k, r = spec.n, spec.k, spec.r
    if r < 0:
        return "unsupported"
    if k in (0, n):
        return "R"
    fam = spec.family
    if n == 2:
        if not spec.ring:
            bad = r % 3 == 0 if fam == "P" else r % 3 == 2
        else:
            bad = (r % 3 == 0 and r >= 3) if fam == "P" else (r % 3 == 2 and r >= 5)
        return "C_only" if bad else "R"
    if n == 3:
        table = _TET_RING if spec.ring else _TET_PLAIN
        return "R" if r in table[(fam, k)] else "C_only"
    if n == 4 and k in (1, 2) and not spec.ring:
        return "C"
    return "unsupported"


def agrees(predicted, classified):
    if predicted == "C":
        return classified in ("R", "C_only")
    return predicted == classified


def max_degree(default=None):
    """Degree cap from ``SYMFEEC_MAX_DEGREE`` (used by the command line)."""
    raw = os.environ.get("SYMFEEC_MAX_DEGREE")
    return int(raw) if raw else default


def degree_table(family, ring, k, n, r_max):
    """One row per degree: prediction, classification, agreement."""
    rows = []
    for r in range(r_max + 1):
        spec = SpaceSpec(family, ring, r, k, n)
        predicted = predict_R_invariance(spec)
        try:
            res = build_A_basis(spec)
            classified, size = res.classification, len(res.basis)
        except NotMonomial:
            classified, size = "NotMonomial", None
        rows.append(
            {
                "family": family,
                "ring": ring,
                "n": n,
                "k": k,
                "r": r,
                "size": size,
                "predicted": predicted,
                "classified": classified,
                "agree": agrees(predicted, classified),
            }
        )
    return rows

