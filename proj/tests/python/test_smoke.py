from fractions import Fraction

import pytest

import worpitzky as w

FROM_ZERO = [10, 49, 628, 4915, 23662, 83005, 235144, 571903]
FROM_ONE = [58, 447, 2936, 13237, 44982, 125123, 300772, 647481]
AFFINE = ["1472.79189", "1691.47232", "1935.96875", "2208.53088", "2511.53681", "2847.49664", "3219.05607"]


def test_fit_start_zero():
    result = w.fit(FROM_ZERO, start=0, step=1, convention="start-zero")
    assert result["degree"] == 6
    assert result["coefficients_x"] == [10, 9, 8, 7, 6, 5, 4]
    assert result["verified"] is True


def test_fit_start_one():
    result = w.fit(FROM_ONE, start=1, step=1, convention="start-one")
    assert result["coefficients_x"] == [17, 13, 11, 7, 5, 3, 2]


def test_fit_affine_grid():
    result = w.fit(AFFINE, start="3.3", step=Fraction(1, 10))
    assert result["coefficients_g"] == [Fraction(s) for s in
                                        ["1472.79189", "206.49095", "11.8405", "0.3439", "0.00505", "0.00003"]]
    assert result["coefficients_x"] == [9, 5, 1, 4, 1, 3]
    assert result["basis_g"] == {"x0": Fraction(33, 10), "h": Fraction(1, 10)}


def test_triangles():
    assert w.build_triangle("mwnt", 4) == [[1], [1, 1], [1, 3, 2], [1, 7, 12, 6]]
    assert w.awnt(6, 4) == 1560
    assert w.mwnt(7, 3) == 602
    assert w.stirling2(4, 2) == 7
    assert w.binomial(6, 3) == 20
    assert w.awnt(25, 25) == 15511210043330985984000000


def test_difference_table_and_degree():
    table = w.difference_table(FROM_ZERO)
    assert table["main_diagonal"] == [10, 39, 540, 3168, 7584, 7800, 2880, 0]
    report = w.detect_degree(AFFINE)
    assert report == {"degree": 5, "constant_row_value": Fraction(9, 2500), "witnesses": 2}
    assert w.diagonal_direct(FROM_ONE, 6) == 1440


def test_solvers_and_compose():
    assert w.solve_start_zero([10, 39, 540, 3168, 7584, 7800, 2880], 6) == [10, 9, 8, 7, 6, 5, 4]
    assert w.solve_start_one([7, 4], 1) == [3, 4]
    assert w.compose_affine([0, 1], 5, 1) == [-5, 1]


def test_oracle():
    assert w.vandermonde_fit([(1, 2), (2, 4), (3, 6)]) == [0, 2]
    assert w.efdt_sum(2, 3, 4, 4) == 1944


def test_errors():
    assert w.parse_scalar("0.0036") == Fraction(9, 2500)
    with pytest.raises(ValueError):
        w.parse_scalar("abc")
    with pytest.raises(ZeroDivisionError):
        w.parse_scalar("1/0")
    with pytest.raises(TypeError):
        w.fit([1.5, 2.5, 3.5])
    with pytest.raises(w.NotPolynomialError):
        w.fit([1, 2, 4, 8, 16, 32])
    with pytest.raises(w.SingularError):
        w.vandermonde_fit([(1, 1), (1, 2)])
