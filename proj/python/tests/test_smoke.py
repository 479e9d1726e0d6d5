import pytest

import thetatool


def test_labels():
    assert thetatool.labels("A", 1) == ["AI"]
    assert thetatool.labels("E", 7) == ["EV", "EVI", "EVII"]


def test_report():
    r = thetatool.report("E", 7, "EV")
    assert r["components"] == 2
    assert r["split"] and r["inner"]
    assert int(r["weyl_order"]) == 2903040
    assert r["degrees"] == [2, 6, 8, 10, 12, 14, 18]


def test_partial_report():
    r = thetatool.report("B", 3, "BI(3)", cap=10)
    assert r["weyl_order"] is None
    assert r["weyl_order_predicted"] == "48"
    assert "W_A too large" in thetatool.report_text("B", 3, "BI(3)", cap=10)


def test_dimensions_and_counts():
    assert thetatool.kp_dimensions("G", 2, "G") == {"g": 14, "k": 6, "p": 8, "a": 2, "m": 0}
    assert thetatool.component_count("D", 4, "DI(4,4)") == 4
    assert thetatool.restricted_type("A", 4, "AIII(2,3)") == "BC2"


def test_poincare():
    assert thetatool.weyl_poincare("A", 2) == [1, 2, 2, 1]
    assert sum(thetatool.weyl_poincare("F", 4)) == 1152
    with pytest.raises(thetatool.CapExceededError):
        thetatool.weyl_poincare("E", 8, cap=1000)


def test_verify():
    assert set(thetatool.suite_names()) == {"centdim", "grading", "poincare", "proposition", "w0"}
    out = thetatool.verify("w0")
    assert out["passed"] and out["cases"] >= 13


def test_errors():
    with pytest.raises(thetatool.UnknownLabelError):
        thetatool.report("E", 7, "EX")
    with pytest.raises(thetatool.InvalidTypeError):
        thetatool.labels("D", 3)
    with pytest.raises(thetatool.ThetaError):
        thetatool.verify("nope")
    with pytest.raises(thetatool.BadPrimeError):
        thetatool.verify("centdim", primes=[4])
