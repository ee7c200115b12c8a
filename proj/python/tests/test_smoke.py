import pytest

import gl11


def test_scalar_arithmetic():
    x = gl11.Scalar("(q^2-1)/(q-1)")
    assert str(x) == "q + 1"
    assert (x - gl11.Scalar("q") - gl11.Scalar(1)).is_zero()
    assert gl11.Scalar("q") ** -1 == gl11.Scalar("1/q")


def test_normal_form():
    # In A(2,2) b^2 = 0; in A(1,1) a and d commute and b^2 is a multiple of a^2 - d^2.
    assert gl11.normal_form("r22", "unbraided", "bb") == "0"
    nf = gl11.normal_form
    assert nf("r11", "unbraided", "da") == nf("r11", "unbraided", "ad")
    assert "a^2" in nf("r11", "unbraided", "bb")


def test_pairing_values():
    # <K, a^k d^l> = q^(k+l).
    assert gl11.Scalar(gl11.pair("r12", "K", 2, 1)) == gl11.Scalar("q^3")
    assert gl11.pair("r11", "A", 3, 0) == "3"


def test_registry_and_run():
    ids = dict(gl11.list_checks())
    assert "ybe.r12" in ids and "appendix.lemmaA1" in ids
    report = gl11.run(checks=["ybe.*"])
    assert [r["status"] for r in report["checks"]] == ["PASS"] * 4


def test_numeric_mode_matches_symbolic():
    sym = gl11.run(checks=["frt.r12.*"])
    num = gl11.run(checks=["frt.r12.*"], mode="numeric", seed=7)
    assert [r["status"] for r in sym["checks"]] == [r["status"] for r in num["checks"]]


def test_config_errors():
    with pytest.raises(ValueError):
        gl11.run(checks=["no.such.check"])
    with pytest.raises(ValueError):
        gl11.normal_form("r33", "unbraided", "a")
