import torsiongalois as tg


def test_divpoly_psi3():
    out = tg.divpoly("0,0,0,1,0", 3)  # y^2 = x^3 + x: psi_3 = 3x^4 + 6x^2 - 1
    assert out["ring"] == "Q"
    assert out["coeffs"] == ["-1", "0", "6", "0", "3"]


def test_divpoly_even_has_y_part():
    out = tg.divpoly("0,0,1,0,0", 4)
    assert set(out) == {"n", "x_part", "y_part"}


def test_charpoly_routes_agree_and_shape():
    out = tg.charpoly("1,0,0,0,1", "1,0,0", 3)
    assert out["routes_agree"] is True
    chi = out["chi"]
    assert chi["ring"] == "Q"
    assert len(chi["coeffs"]) == 9  # degree 8, monic
    assert chi["coeffs"][-1] == "1"


def test_charpoly_qt_ring():
    out = tg.charpoly("1,0,0,0,t", "1,0,0", 3, method="matrix")
    assert out["chi"]["ring"] == "Qt"


def test_classify_mod3_fixture():
    out = tg.classify_mod3("0,0,1,0,0")  # y^2 + y = x^3
    assert out["label"] == "C2(split)"
    assert out["qualifier"] == "exact"


def test_minus_id_witness():
    out = tg.minus_id("0,-1,1,-10,-20", 3, 100)
    assert out["found"] is True
    assert out["prime"] == 7
