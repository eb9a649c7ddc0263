import os
import tempfile

import pytest

import polyconj as pc


def test_root_counts():
    assert pc.sturm_count("x^3 - x") == 3
    assert pc.sturm_count([1, 0, 1]) == 0
    assert pc.real_zeros_with_multiplicity("x^3 - 3*x + 2") == 3
    with pytest.raises(ValueError):
        pc.sturm_count("x^^2")


def test_sequences():
    assert [pc.flat_count(n) for n in (3, 4, 5)] == [2, 12, 286]
    assert len(pc.enumerate_sequences(4)) == 12
    assert pc.flat_count(8) == 108995910720


def test_descartes():
    assert pc.descartes_pair("++-++") == (2, 2)
    r = pc.realize("+-+", 2, 0, budget=2000, seed=1)
    assert r["realized"]
    assert pc.sturm_count(r["witness"]) == 2


def test_jensen_bridge():
    P = pc.phi_expand("x^3 - 2*x + 5")
    assert all(pc.jensen_literal("x^3 - 2*x + 5", i) == P[i] for i in range(len(P)))


def test_other_modules():
    assert not pc.tropical_bounds([1, 3, 3, 1])["violation"]
    assert pc.sos_grid(3, 2) == {"zero_count": 9, "ok": True, "zero_set_exact": True}
    assert pc.max_zero_search(2, 200, 0)["max_count"] == 1
    # characteristic roots 0 and 1, so y = 1 - e^x
    z = pc.count_real_zeros([[-1, 0], [0, 0]], [[1, 0], [-1, 0]])
    assert z["count"] == 1 and abs(z["zeros"][0]) < 1e-12
    two = {"positions": [[-1, 0, 0], [1, 0, 0]], "charges": [1, 1]}
    assert len(pc.equilibria(two)["points"]) == 1
    psi = pc.psi_maxima({"points": [[-1, 1], [1, 1]], "charges": [1, 1], "alpha": 1})
    assert 1 <= psi["count"] <= 2


def test_findings_replay():
    f = pc.make_finding("jensen.wplus", {"p": ["1", "0", "1"]})
    assert f["severity"] == "VIOLATION_CANDIDATE"
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "ledger.jsonl")
        pc.ledger_append(path, f)
        size = os.path.getsize(path)
        (back,) = pc.ledger_read(path)
        assert back["id"] == f["id"]
        assert pc.replay(back)["status"] == "CONFIRMED"
        assert os.path.getsize(path) == size
    assert len(pc.known_conjectures()) == 21
