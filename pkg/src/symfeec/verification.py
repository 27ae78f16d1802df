"""Named verification suites, shared by the ``verify`` command and the test suite.

Each suite returns a list of :class:`Check` records; a suite passes when all
of its checks pass.  Suites that compare against stated degree tables report
every disagreement instead of stopping at the first one.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .combinatorics import (
    all_permutations,
    compose,
    eps_split,
    generators,
    perm_sign,
    sigma_set,
    sort_with_sign,
)
from .errors import NotInvariant, NotMonomial
from .extension import extend, geometric_decomposition, relocated_face
from .forms import (
    Form,
    coordinates,
    equals,
    exterior_derivative,
    faces,
    homogenize,
    monomial_form,
    reduce,
    trace,
    wedge,
)
from .isomorphisms import IsoSpec, apply
from .linalg import is_independent
from .recursion import (
    base_constant_basis,
    build_A_basis,
    degree_table,
    replay,
)
from .scalar import XI3, Cyclo, I
from .spaces import SpaceSpec, coordinate_rows, dimension, spanning_set
from .symmetry import check_invariance, obstruction_order, pullback, verify_certificate

__all__ = ["Check", "SUITES", "run_suite", "run_all"]


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.suite}: {self.name}" + (
            f" ({self.detail})" if self.detail else ""
        )


T01 = (1, 0, 2, 3)
T02 = (2, 1, 0, 3)
T03 = (3, 1, 2, 0)

# pullback(source) = sign * target, names index the psi triple (w, p, k)
PSI_TABLE = {
    T01: {"w": (-1, "k"), "p": (1, "p"), "k": (-1, "w")},
    T02: {"w": (1, "w"), "p": (-1, "k"), "k": (-1, "p")},
    T03: {"w": (-1, "p"), "p": (-1, "w"), "k": (1, "k")},
}
WEDGE_TABLE = {
    T01: {"wp": (1, "pk"), "wk": (-1, "wk"), "pk": (1, "wp")},
    T02: {"wp": (-1, "wk"), "wk": (-1, "wp"), "pk": (-1, "pk")},
    T03: {"wp": (-1, "wp"), "wk": (-1, "pk"), "pk": (-1, "wk")},
}
# pullback(phi_i) = xi3 ** e * phi_j
PHI_TABLE = {
    (1, 0, 2): {0: (1, 1), 1: (2, 0)},
    (2, 1, 0): {0: (2, 1), 1: (1, 0)},
}
TAU5 = (1, 0, 2, 3, 4)
KAPPA5 = (1, 2, 3, 4, 0)
# (generator, source, multiplier, target): pullback(zeta_source) = multiplier * zeta_target
ZETA_RELATIONS = [
    (KAPPA5, 0, Cyclo(1), 0),
    (KAPPA5, 5, Cyclo(1), 1),
    (TAU5, 2, -I, 3),
    (TAU5, 3, I, 2),
    (TAU5, 4, I, 5),
    (TAU5, 5, -I, 4),
]


def _table_checks(suite, label, forms, table, names):
    out = []
    by_name = dict(zip(names, forms))
    for g, rows in table.items():
        for src, (sign, dst) in rows.items():
            ok = equals(pullback(by_name[src], g), by_name[dst] * sign)
            out.append(Check(suite, f"{label} {g}: {src} -> {'+' if sign > 0 else '-'}{dst}", ok))
    return out


def _certificate_checks(suite, label, q, mode, gens=None, allowed=None):
    out = []
    try:
        cert = check_invariance(q, mode, gens=gens)
    except NotInvariant as exc:
        return [Check(suite, f"{label}: {mode}-certificate", False, str(exc))]
    out.append(Check(suite, f"{label}: {mode}-certificate verifies", verify_certificate(q, cert)))
    if allowed is not None:
        chis = {c for chi in cert.chis for c in chi}
        out.append(
            Check(suite, f"{label}: multipliers in the allowed set", chis <= set(allowed),
                  ", ".join(sorted(str(c) for c in chis)))
        )
    return out


def suite_signed_bases_3d():
    s = "signed-bases-3d"
    t0 = time.perf_counter()
    psi = base_constant_basis(3, 1).basis
    wedges = base_constant_basis(3, 2).basis
    out = _table_checks(s, "psi", list(psi), PSI_TABLE, ["w", "p", "k"])
    out += _table_checks(s, "wedge", list(wedges), WEDGE_TABLE, ["wp", "wk", "pk"])
    units = [Cyclo(1), Cyclo(-1)]
    for label, q in (("psi", psi), ("wedge", wedges)):
        out += _certificate_checks(s, label, q, "R", allowed=units)
        out += _certificate_checks(s, label + " (transpositions)", q, "R", gens=[T01, T02, T03], allowed=units)
    dt = time.perf_counter() - t0
    out.append(Check(s, "runtime below 1 s", dt < 1.0, f"{dt:.3f} s"))
    return out


def suite_cube_root_triangle():
    s = "cube-root-triangle"
    t0 = time.perf_counter()
    phi = base_constant_basis(2, 1).basis
    out = []
    for g, rows in PHI_TABLE.items():
        for i, (e, j) in rows.items():
            ok = equals(pullback(phi[i], g), phi[j] * XI3 ** e)
            out.append(Check(s, f"phi table {g}: phi{i} -> xi^{e} phi{j}", ok))
    roots = [XI3, XI3 * XI3]
    out += _certificate_checks(s, "phi (table generators)", phi, "C", gens=list(PHI_TABLE), allowed=roots)
    out += _certificate_checks(s, "phi (default generators)", phi, "C", allowed=roots)
    try:
        check_invariance(phi, "R")
        out.append(Check(s, "real certificate is refused", False))
    except NotInvariant:
        out.append(Check(s, "real certificate is refused", True))
    oo = obstruction_order(2, 2)
    out.append(Check(s, "group orders (6, 8, no divisibility)", oo == (6, 8, False), str(oo)))
    dt = time.perf_counter() - t0
    out.append(Check(s, "runtime below 1 s", dt < 1.0, f"{dt:.3f} s"))
    return out


def suite_four_simplex_2forms():
    s = "four-simplex-2forms"
    t0 = time.perf_counter()
    zs = base_constant_basis(4, 2).basis
    out = []
    for g, src, m, dst in ZETA_RELATIONS:
        ok = equals(pullback(zs[src], g), zs[dst] * m)
        out.append(Check(s, f"{g}: zeta{src} -> ({m}) zeta{dst}", ok))
    rows, ncols = coordinate_rows(list(zs))
    ok = len(zs) == dimension(SpaceSpec("P", False, 0, 2, 4)) and is_independent(rows, ncols)
    out.append(Check(s, "six forms are a basis", ok))
    quarter = [Cyclo(1), Cyclo(-1), I, -I]
    out += _certificate_checks(s, "zeta", zs, "C", gens=[TAU5, KAPPA5], allowed=quarter)
    out += _certificate_checks(s, "zeta (default generators)", zs, "C")
    dt = time.perf_counter() - t0
    out.append(Check(s, "runtime below 5 s", dt < 5.0, f"{dt:.3f} s"))
    return out


def _all_specs(n_max, r_range, families=("P", "Pminus"), rings=(False, True)):
    for n in range(1, n_max + 1):
        for fam in families:
            for ring in rings:
                for r in r_range:
                    for k in range(n + 1):
                        yield SpaceSpec(fam, ring, r, k, n)


def suite_spanning_sets():
    s = "spanning-sets"
    out = []
    for spec in _all_specs(3, range(0, 4)):
        # the indexed generator family; coincident generators stay separate
        q = spanning_set(spec, dedupe=False)
        try:
            cert = check_invariance(q, "R", strict=False)
            ok = verify_certificate(q, cert)
            detail = f"{len(q)} elements"
        except NotInvariant as exc:
            ok, detail = False, str(exc)
        out.append(Check(s, f"{spec.label()} real-invariant", ok, detail))
    return out


def _iso_cases(n, r):
    for k in range(n + 1):
        yield IsoSpec("I", k, r, n)
        yield IsoSpec("J", k, r, n)
        yield IsoSpec("I", k, r, n, "inverse")
        yield IsoSpec("J", k, r, n, "inverse")


def suite_iso_symmetry(r_max=3):
    s = "iso-symmetry"
    t0 = time.perf_counter()
    out = []
    for n in range(1, 4):
        for r in range(0, r_max + 1):
            for iso in _iso_cases(n, r):
                ok, bad = True, ""
                dom = spanning_set(iso.domain())
                for pi in generators(n):
                    sign = perm_sign(pi)
                    for w in dom:
                        lhs = pullback(apply(iso, w), pi)
                        rhs = apply(iso, pullback(w, pi)) * sign
                        if not reduce(lhs - rhs).is_zero():
                            ok, bad = False, f"pi={pi}, element {w}"
                            break
                    if not ok:
                        break
                name = f"{iso.which}{'^-1' if iso.direction == 'inverse' else ''} k={iso.k} r={r} n={n}"
                out.append(Check(s, name, ok, bad or f"{len(dom)} generators"))
    dt = time.perf_counter() - t0
    out.append(Check(s, "runtime below 60 s", dt < 60.0, f"{dt:.1f} s"))
    return out


def suite_extension_laws(r_max=3):
    s = "extension-laws"
    out = []
    for n in (2, 3):
        for fam in ("P", "Pminus"):
            for r in range(1, r_max + 1):
                for k in range(n + 1):
                    spec = SpaceSpec(fam, False, r, k, n)
                    inv = right = sym = True
                    count = 0
                    for m in range(k, n):
                        local = spanning_set(spec.with_(ring=True, n=m))
                        for f in faces(n, m):
                            for w in local:
                                e = extend(spec, f, w)
                                count += 1
                                inv = inv and equals(trace(e, f), w)
                                for g in faces(n):
                                    if g.dim < n and g.dim >= k and not f.issubface(g):
                                        right = right and not coordinates(trace(e, g))
                            for pi in generators(n):
                                g, mu = relocated_face(f, pi)
                                for w in local:
                                    lhs = extend(spec, f, pullback(w, mu))
                                    rhs = pullback(extend(spec, g, w), pi)
                                    sym = sym and equals(lhs, rhs)
                    label = spec.label()
                    out.append(Check(s, f"{label}: trace after extension is the identity", inv, f"{count} forms"))
                    out.append(Check(s, f"{label}: traces on faces not containing the source vanish", right))
                    out.append(Check(s, f"{label}: extension commutes with symmetries", sym))
    return out


def suite_decomposition():
    s = "decomposition"
    out = []
    for spec in _all_specs(3, range(1, 5), rings=(False,)):
        face_sum = sum(
            dimension(spec.with_(ring=True, n=m)) * len(faces(spec.n, m))
            for m in range(spec.k, spec.n + 1)
        )
        dim = dimension(spec)
        out.append(Check(s, f"{spec.label()}: face dimensions sum to {dim}", face_sum == dim, f"sum {face_sum}"))
        try:
            plan = geometric_decomposition(spec)
            union = plan.union()
            rows, ncols = coordinate_rows(union.elements)
            ok = len(union) == dim and (not rows or is_independent(rows, ncols))
            out.append(Check(s, f"{spec.label()}: assembled union is a basis", ok))
        except Exception as exc:  # RankDeficient and friends
            out.append(Check(s, f"{spec.label()}: assembled union is a basis", False, str(exc)))
    return out


def _table_suite(s, cases):
    out = []
    for fam, ring, k, n, r_max in cases:
        for row in degree_table(fam, ring, k, n, r_max):
            spec = SpaceSpec(fam, ring, row["r"], k, n)
            out.append(
                Check(
                    s,
                    f"{spec.label()}: stated {row['predicted']}, built {row['classified']}",
                    row["agree"],
                    f"{row['size']} elements",
                )
            )
    return out


def suite_degree_tables():
    cases = []
    for fam in ("P", "Pminus"):
        for ring in (False, True):
            cases.append((fam, ring, 1, 2, 9))
    for k in (1, 2):
        for fam in ("P", "Pminus"):
            for ring in (False, True):
                cases.append((fam, ring, k, 3, 10))
    return _table_suite("degree-tables", cases)


def suite_four_simplex(r_max_1=5):
    s = "four-simplex"
    t0 = time.perf_counter()
    out = []
    for r in range(0, 3):
        spec = SpaceSpec("P", False, r, 2, 4)
        res = build_A_basis(spec)
        ok = res.certificate is not None and verify_certificate(res.basis, res.certificate)
        out.append(Check(s, f"{spec.label()}: complex certificate", ok, f"{len(res.basis)} elements, {res.classification}"))
    for fam in ("P", "Pminus"):
        for r in range(0, r_max_1 + 1):
            spec = SpaceSpec(fam, False, r, 1, 4)
            try:
                res = build_A_basis(spec)
                ok = res.certificate is not None and verify_certificate(res.basis, res.certificate)
                out.append(Check(s, f"{spec.label()}: complex certificate", ok, f"{len(res.basis)} elements, {res.classification}"))
            except NotMonomial as exc:
                last = exc.chain[-1]
                ok = last.r == 0 and not last.ring and last.family == "P"
                out.append(
                    Check(s, f"{spec.label()}: reaches a missing constant basis", ok,
                          " -> ".join(x.label() for x in exc.chain))
                )
    dt = time.perf_counter() - t0
    out.append(Check(s, "runtime below 5 min", dt < 300.0, f"{dt:.1f} s"))
    return out


def _random_cyclo(rng):
    return Cyclo(*[rng.randint(-3, 3) for _ in range(4)]) * Cyclo(rng.randint(1, 3)).inverse()


def _random_form(rng, n, k, deg):
    out = Form._wrap(n, k, {})
    for sigma in sigma_set(k, n):
        if rng.random() < 0.5:
            alpha = [0] * (n + 1)
            for _ in range(rng.randint(0, deg)):
                alpha[rng.randrange(n + 1)] += 1
            out = out + monomial_form(n, tuple(alpha), sigma, rng.randint(-3, 3))
    return out


def suite_properties(seed=0, samples=40):
    s = "properties"
    rng = random.Random(seed)
    out = []
    ok = True
    for _ in range(samples):
        a, b, c = (_random_cyclo(rng) for _ in range(3))
        ok = ok and a + b == b + a and a * b == b * a
        ok = ok and (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
        ok = ok and a * (b + c) == a * b + a * c and a - a == 0 and a * 1 == a
        if a:
            ok = ok and a * a.inverse() == 1
    out.append(Check(s, "field axioms on random elements", ok, f"{samples} triples"))

    literal = corrected = True
    for k in range(0, 4):
        for sigma in sigma_set(k, 3):
            for q in range(4):
                if q in sigma:
                    continue
                left, right = eps_split(sigma, (q,)), eps_split((q,), sigma)
                # sigma indexed over [1:k], so b - a = k - 1
                literal = literal and left == (-1) ** (k - 1) * right
                corrected = corrected and left == (-1) ** k * right
    out.append(Check(s, "sign identity with exponent b - a", literal,
                     "moving q across k indices costs k transpositions"))
    out.append(Check(s, "sign identity with exponent b - a + 1", corrected))

    ok = True
    for tau in itertools.permutations(range(5), 3):
        rho, sign = sort_with_sign(tau)
        for p in itertools.permutations(range(3)):
            if all(tau[p[i]] < tau[p[i + 1]] for i in range(2)):
                ok = ok and sign == perm_sign(p) and rho == tuple(tau[i] for i in p)
    out.append(Check(s, "sorting sign equals the sign of the unique ordering permutation", ok, "all injective maps [1:3] -> [0:4]"))

    dd = leib = True
    for n in (1, 2, 3):
        for k in range(n + 1):
            for _ in range(4):
                a = _random_form(rng, n, k, 3)
                dd = dd and reduce(exterior_derivative(exterior_derivative(a))).is_zero()
                for l in range(n - k + 1):
                    b = _random_form(rng, n, l, 2)
                    lhs = exterior_derivative(wedge(a, b))
                    rhs = wedge(exterior_derivative(a), b) + wedge(a, exterior_derivative(b)) * (-1) ** k
                    leib = leib and equals(lhs, rhs)
    out.append(Check(s, "d o d = 0", dd))
    out.append(Check(s, "Leibniz rule", leib))

    ok = True
    for n in (1, 2, 3):
        perms = all_permutations(n)
        for _ in range(6):
            k = rng.randint(0, n)
            w = _random_form(rng, n, k, 2)
            p, q = rng.choice(perms), rng.choice(perms)
            ok = ok and pullback(w, compose(p, q)) == pullback(pullback(w, q), p)
    out.append(Check(s, "pullback action law", ok))

    ok = True
    for n in (1, 2, 3):
        for _ in range(6):
            k = rng.randint(0, n)
            w = _random_form(rng, n, k, 2)
            deg = w.degree() + rng.randint(0, 2) if w else 2
            ok = ok and reduce(homogenize(w, deg)) == reduce(w)
    out.append(Check(s, "homogenize then reduce equals reduce", ok))
    return out


def suite_provenance():
    s = "provenance"
    out = []
    for spec in (
        SpaceSpec("P", False, 3, 1, 2),
        SpaceSpec("Pminus", False, 3, 1, 2),
        SpaceSpec("P", False, 2, 1, 3),
        SpaceSpec("Pminus", False, 2, 2, 3),
    ):
        res = build_A_basis(spec, classify=False)
        ok = all(equals(replay(p), e) for p, e in zip(res.provenance, res.basis))
        out.append(Check(s, f"{spec.label()}: replay reproduces every element", ok, f"{len(res.basis)} elements"))
    return out


SUITES = {
    "signed-bases-3d": ("real sign tables of the constant 3d bases", suite_signed_bases_3d),
    "cube-root-triangle": ("complex constant basis on the triangle", suite_cube_root_triangle),
    "four-simplex-2forms": ("complex constant 2-form basis on the 4-simplex", suite_four_simplex_2forms),
    "spanning-sets": ("real invariance of the canonical spanning sets", suite_spanning_sets),
    "iso-symmetry": ("isomorphisms commute with symmetries up to sign", suite_iso_symmetry),
    "extension-laws": ("extension operator laws", suite_extension_laws),
    "decomposition": ("geometric decomposition", suite_decomposition),
    "degree-tables": ("degree tables of the recursive bases", suite_degree_tables),
    "four-simplex": ("recursive bases on the 4-simplex", suite_four_simplex),
    "properties": ("algebraic property checks", suite_properties),
    "provenance": ("provenance replay", suite_provenance),
}

# suites aggregated by ``verify all``, in acceptance order
ACCEPTANCE = [
    "signed-bases-3d",
    "cube-root-triangle",
    "four-simplex-2forms",
    "spanning-sets",
    "iso-symmetry",
    "extension-laws",
    "decomposition",
    "degree-tables",
    "four-simplex",
    "properties",
]


def run_suite(name):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name][1]()


def run_all():
    return {name: run_suite(name) for name in ACCEPTANCE}

