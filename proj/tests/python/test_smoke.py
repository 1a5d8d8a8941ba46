import pytest

import lclab


def test_binomials():
    assert lclab.big_binomial(10, 3) == "120"
    assert lclab.binom_mod_p(10, 3, 7) == 120 % 7
    assert lclab.is_prime(13) and not lclab.is_prime(15)


def test_normalize_poly():
    assert lclab.normalize_poly("x2 + x1^2 - x2", 0, 2) == "x1^2"
    with pytest.raises(lclab.InvalidInput):
        lclab.normalize_poly("x3", 0, 2)


def test_rp2_frobenius():
    code, rep = lclab.run("frobenius", family="sr n=6 nonfaces=RP2", p=2, j=3)
    assert code == 0
    assert rep["verdict"] == "non-nilpotent"
    assert rep["dim"] == 1
    assert rep["frobenius_matrix"] == [[1]]
    assert rep["job"]["family"] == "sr n=6 nonfaces=RP2"


def test_identity_and_predict():
    code, rep = lclab.run("identity2x3", k=0)
    assert code == 0 and rep["identity"]["residual"] == "0"
    code, rep = lclab.run("predict", family="generic m=2 n=3 t=2", dim=5)
    assert rep["prediction"]["vanishes"] and rep["prediction"]["index"] == 3


def test_inline_ideal():
    ideal = {"char": 0, "vars": 3, "generators": ["x1^3 + x2^3 + x3^3"]}
    code, rep = lclab.run("frobenius", ideal=ideal, p=5, j=2)
    assert code == 0 and rep["verdict"] == "nilpotent"


def test_errors():
    with pytest.raises(lclab.InvalidInput):
        lclab.run("frobenius", family="generic m=2 n=3 t=2", p=4, j=3)
    with pytest.raises(lclab.InvalidInput):
        lclab.run("nonsense")
