import json

import pytest

from symfeec.errors import NotInvariant, NotMonomial
from symfeec.forms import equals
from symfeec.recursion import (
    ABasisResult,
    agrees,
    base_constant_basis,
    build_A_basis,
    classify_basis,
    degree_table,
    max_degree,
    predict_R_invariance,
    replay,
)
from symfeec.spaces import SpaceSpec, dimension, rank_dim, spanning_set
from symfeec.symmetry import check_invariance, verify_certificate


@pytest.mark.parametrize("n,k,mode,size", [
    (1, 0, "R", 1), (1, 1, "R", 1), (2, 1, "C", 2), (3, 1, "R", 3), (3, 2, "R", 3), (4, 2, "C", 6),
])
def test_catalog(n, k, mode, size):
    entry = base_constant_basis(n, k)
    assert len(entry.basis) == size == dimension(SpaceSpec("P", False, 0, k, n))
    assert entry.mode == mode
    assert verify_certificate(entry.basis, entry.certificate)
    if mode == "C":
        with pytest.raises(NotInvariant):
            check_invariance(entry.basis, "R")


@pytest.mark.parametrize("n,k", [(4, 1), (4, 3), (5, 2)])
def test_missing_catalog_entries(n, k):
    with pytest.raises(NotMonomial):
        base_constant_basis(n, k)


@pytest.mark.parametrize("spec,expected", [
    (SpaceSpec("P", False, 1, 1, 2), "R"),
    (SpaceSpec("Pminus", False, 2, 1, 2), "C_only"),
    (SpaceSpec("Pminus", False, 2, 2, 3), "R"),
    (SpaceSpec("P", False, 0, 1, 2), "C_only"),
    (SpaceSpec("P", False, 1, 0, 3), "R"),
], ids=lambda x: x.label() if isinstance(x, SpaceSpec) else x)
def test_build_examples(spec, expected):
    res = build_A_basis(spec)
    assert res.classification == expected
    assert predict_R_invariance(spec) == expected
    assert len(res.basis) == dimension(spec)
    assert verify_certificate(res.basis, res.certificate)


def test_build_sizes_and_ranks():
    for n in (1, 2, 3):
        for k in range(n + 1):
            for r in range(4):
                for fam in ("P", "Pminus"):
                    for ring in (False, True):
                        spec = SpaceSpec(fam, ring, r, k, n)
                        res = build_A_basis(spec, classify=False)
                        assert len(res.basis) == dimension(spec)
                        if len(res.basis):
                            assert rank_dim(res.basis) == (len(res.basis), True)
                            s = spanning_set(spec)
                            assert rank_dim(list(s) + list(res.basis))[0] == len(res.basis)


@pytest.mark.parametrize("spec,expected", [
    (SpaceSpec("P", False, 3, 1, 2), "C_only"),
    (SpaceSpec("Pminus", False, 7, 1, 3), "R"),
    (SpaceSpec("P", False, 9, 1, 3), "C_only"),
    (SpaceSpec("P", False, 4, 0, 3), "R"),
    (SpaceSpec("P", False, 2, 1, 4), "C"),
    (SpaceSpec("P", False, 2, 3, 4), "unsupported"),
    (SpaceSpec("P", True, 3, 1, 2), "C_only"),
    (SpaceSpec("P", True, 0, 1, 2), "R"),
], ids=lambda x: x.label() if isinstance(x, SpaceSpec) else x)
def test_predictions(spec, expected):
    assert predict_R_invariance(spec) == expected


def test_agreement_rule():
    assert agrees("C", "R") and agrees("C", "C_only")
    assert not agrees("C", "NotMonomial")
    assert agrees("R", "R") and not agrees("R", "C_only")


def test_provenance_replays_exactly():
    for spec in (SpaceSpec("P", False, 2, 1, 3), SpaceSpec("Pminus", True, 4, 1, 2)):
        res = build_A_basis(spec, classify=False)
        for e, node in zip(res.basis, res.provenance):
            assert equals(replay(node).to_form(), e.to_form())


def test_provenance_records_the_route():
    res = build_A_basis(SpaceSpec("Pminus", True, 2, 1, 2), classify=False)
    node = res.provenance[0]
    assert node["op"] == "iso" and node["which"] == "I"
    assert node["child"] == {"op": "base", "n": 2, "k": 1, "index": 0}


def test_four_simplex_one_forms_hit_the_missing_base_case():
    with pytest.raises(NotMonomial) as info:
        build_A_basis(SpaceSpec("P", False, 0, 1, 4))
    chain = info.value.chain
    assert chain[-1] == SpaceSpec("P", False, 0, 1, 4)
    res = build_A_basis(SpaceSpec("P", False, 1, 1, 4))
    assert res.classification in ("R", "C_only")


def test_result_json_round_trip():
    res = build_A_basis(SpaceSpec("Pminus", False, 2, 1, 2))
    data = json.loads(json.dumps(res.to_json()))
    back = ABasisResult.from_json(data)
    assert back.spec == res.spec and back.classification == "C_only"
    assert all(equals(a.to_form(), b.to_form()) for a, b in zip(back.basis, res.basis))
    assert verify_certificate(back.basis, back.certificate)
    assert classify_basis(back)[0] == "C_only"


def test_small_degree_table():
    rows = degree_table("P", False, 1, 2, 4)
    assert [r["classified"] for r in rows] == ["C_only", "R", "R", "C_only", "R"]
    assert all(r["agree"] for r in rows)


def test_degree_cap(monkeypatch):
    monkeypatch.delenv("SYMFEEC_MAX_DEGREE", raising=False)
    assert max_degree() is None
    monkeypatch.setenv("SYMFEEC_MAX_DEGREE", "4")
    assert max_degree() == 4
