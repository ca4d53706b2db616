import pytest

import askw


def test_genus_and_index_set():
    assert askw.genus(5, 2, 1) == 16
    assert askw.genus(5, 2, 3) == 12
    assert askw.index_set(3, 2, 1) == [(0, 1), (0, 2), (1, 2), (2, 2)]
    assert len(askw.minkowski_sum(5, 2, 1)) == 49
    assert askw.anchors(5, 2, 1) == [(0, 2), (0, 3), (1, 3), (2, 3)]


def test_sigma():
    assert askw.sigma(3, 2, 1, 4, 4) == "z[2,2]*z[2,2]"
    assert askw.sigma(5, 2, 1, 1, 7) == "z[1,3]*z[0,4]"


def test_info_document():
    doc = askw.info(5, 2, 3)
    assert doc["schema"] == "askw-info/1"
    assert doc["params"]["genus"] == 12


def test_generators_document():
    doc = askw.generators(3, 2, 1, fibre="special")
    assert doc["schema"] == "askw-generators/1"
    assert len(doc["G1"]) == 1
    assert doc["G2"] == []
    assert doc == askw.generators(3, 2, 1, fibre="special")


def test_certify():
    cert = askw.certify(3, 2, 1)
    assert cert["status"] == "PASS_WITH_CAVEAT"
    assert askw.certify(3, 2, 1, corrupt_one=True)["status"] == "FAIL"


def test_oracle():
    report = askw.kernel_oracle(3, 2, 1, fibre="special", specialization=[1, "2"])
    assert report["kernel_dim"] == 1


def test_errors():
    with pytest.raises(askw.AskwError, match="NonPrimeP"):
        askw.genus(4, 2, 1)
    with pytest.raises(askw.AskwError):
        askw.index_set(5, 2, 5)
    with pytest.raises(ValueError):
        askw.generators(5, 2, 1, fibre="other")
