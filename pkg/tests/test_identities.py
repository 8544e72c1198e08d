"""Identity checks: frozen worked examples, symbolic cross-derivation of every
transcribed closed form, and a smoke run of the grid."""

import json
from fractions import Fraction

import pytest

from evenfactor.identities import (
    check_edge_diff_case1,
    check_edge_diff_case3,
    check_phi_diff_case1,
    check_phi_diff_case3,
    check_sign_claims,
    check_theta_gap_poly_identity,
    edge_gap_cubic,
    edge_route_floor,
    floor_quadratic,
    floor_quadratic_min_closed_form,
    grid_failures,
    make_check,
    radius_gap_quadratic,
    run_identity_grid,
    small_cliques_deriv_at_floor_closed_form,
    spectral_route_floor,
    theta_gap_quadratic,
)

def by_name(checks, name):
    return [c for c in checks if c.name == name]


class TestEdgeDiffs:
    def test_case1_worked_example(self):
        c = check_edge_diff_case1(12, 3, 2)
        assert (c.lhs, c.rhs, c.passed) == (6, Fraction(6), True)

    def test_case1_degenerate_equal(self):
        c = check_edge_diff_case1(10, 5, 5)
        assert c.lhs == 0 and c.passed

    def test_case1_another_point(self):
        assert check_edge_diff_case1(16, 4, 3).passed

    def test_case3_worked_example(self):
        c = check_edge_diff_case3(14, 3, 4)
        assert c.lhs == 67 - 59 == 8
        assert edge_gap_cubic(3, 14, 4) == 16
        assert c.passed

    def test_case3_s_equals_delta(self):
        c = check_edge_diff_case3(12, 3, 3)
        assert c.lhs == 0 and c.passed

    def test_case3_s2_escape(self):
        c = check_edge_diff_case3(20, 2, 5)
        assert c.passed and c.lhs > 0

    def test_invalid_parameters_rejected(self):
        with pytest.raises(ValueError):
            check_edge_diff_case3(8, 2, 6)  # big block underflows


class TestCharpolyGaps:
    def test_case1_sample_points(self):
        for c in check_phi_diff_case1(10, 4, 3, xs=(0, 1, 2)):
            assert c.passed

    def test_case1_s_equals_delta_zero(self):
        for c in check_phi_diff_case1(12, 3, 3, xs=(0, 1, 2, 7)):
            assert c.lhs == 0 and c.passed

    def test_case1_at_radius_floor(self):
        c = check_phi_diff_case1(12, 5, 2, xs=(10,))[0]
        assert c.passed
        assert radius_gap_quadratic(10, 12, 5, 2) > 0

    def test_case3_at_theta(self):
        c = check_phi_diff_case3(14, 3, 4)
        assert c.passed
        assert c.params["extremal_charpoly_at_theta"] <= 1e-8

    def test_case3_s2(self):
        assert check_phi_diff_case3(20, 2, 5).passed

    def test_case3_s_equals_delta(self):
        c = check_phi_diff_case3(12, 3, 3)
        assert abs(c.lhs) < 1e-7 and c.passed

    def test_poly_certification_exact(self):
        for c in check_theta_gap_poly_identity(14, 3, 4, xs=(0, 1, 2, -1)):
            assert c.passed


class TestTranscriptions:
    """Re-derive every closed form symbolically; a typo in the module's
    transcription cannot pass these."""

    sympy = pytest.importorskip("sympy")

    def _syms(self):
        import sympy

        return sympy.symbols("x n s delta")

    def _sym_charpoly(self, rows):
        import sympy

        x = sympy.symbols("x")
        return sympy.expand(sympy.det(x * sympy.eye(3) - sympy.Matrix(rows)))

    def test_radius_gap_quadratic(self):
        import sympy

        x, n, s, d = self._syms()
        b2 = self._sym_charpoly([[s - 1, n - 2 * s + 1, s - 1], [s, n - 2 * s, 0], [s, 0, 0]])
        bstar = b2.subs(s, d)
        gap = sympy.expand(b2 - bstar - (s - d) * radius_gap_quadratic(x, n, s, d))
        assert gap == 0

    def test_theta_gap_quadratic(self):
        import sympy

        x, n, s, d = self._syms()
        q = d + 1 - s
        big = n - s - q * (s - 1)
        b3 = self._sym_charpoly([[s - 1, big, (s - 1) * q], [s, big - 1, 0], [s, 0, q - 1]])
        bstar = self._sym_charpoly(
            [[d - 1, n - 2 * d + 1, d - 1], [d, n - 2 * d, 0], [d, 0, 0]]
        )
        gap = sympy.expand(b3 - bstar - (d - s) * theta_gap_quadratic(x, n, s, d))
        assert gap == 0

    def test_floor_quadratic_is_theta_gap_at_radius_floor(self):
        import sympy

        x, n, s, d = self._syms()
        lhs = theta_gap_quadratic(n - d, n, s, d)
        rhs = floor_quadratic(n, s, d)
        assert sympy.expand(lhs - rhs) == 0

    def test_floor_quadratic_min(self):
        import sympy

        x, n, s, d = self._syms()
        nmin = sympy.Rational(1, 3) * d**2 + d
        got = sympy.expand(floor_quadratic(nmin, s, d))
        inner = (
            d * ((s - 2) * d**2 - 3 * (s - 2) * d + 3 * s**2 - 3 * s + 3)
            - 9 * s**3
            + 27 * s**2
            - 18 * s
            + 9
        )
        want = sympy.expand(d * inner / 9 + s * (s**3 - 5 * s**2 + 8 * s - 5))
        assert sympy.expand(got - want) == 0

    def test_floor_quadratic_pivot_derivative(self):
        import sympy

        x, n, s, d = self._syms()
        hp = sympy.diff(floor_quadratic(x, s, d), x)
        assert sympy.simplify(hp.subs(x, sympy.Rational(1, 2) * (3 * d - s - 1))) == 0

    def test_small_cliques_derivative_closed_form(self):
        import sympy

        x, n, s, d = self._syms()
        q = d + 1 - s
        big = n - s - q * (s - 1)
        b3 = self._sym_charpoly([[s - 1, big, (s - 1) * q], [s, big - 1, 0], [s, 0, q - 1]])
        deriv = sympy.diff(b3, x).subs(x, n - d)
        want = small_cliques_deriv_at_floor_closed_form(n, s, d)
        assert sympy.expand(deriv - want) == 0

    def test_edge_gap_cubic(self):
        import sympy

        x, n, s, d = self._syms()
        e_star = sympy.binomial(n - d + 1, 2) + d * (d - 1)
        e_small = (
            sympy.binomial(n - (d + 1 - s) * (s - 1), 2)
            + s * (s - 1) * (d + 1 - s)
            + (s - 1) * sympy.binomial(d + 1 - s, 2)
        )
        gap = sympy.expand(
            e_star - e_small - sympy.Rational(1, 2) * (d - s) * edge_gap_cubic(s, n, d)
        )
        assert sympy.simplify(gap) == 0

    def test_edge_gap_at_3_is_linear(self):
        import sympy

        x, n, s, d = self._syms()
        assert sympy.expand(edge_gap_cubic(3, n, d) - (2 * n - 3 * d)) == 0


class TestSignClaims:
    def test_edge_cubic_at_3_example(self):
        checks = check_sign_claims(14, 3, 3)
        (value,) = by_name(checks, "edge_cubic_at_3_value")
        assert value.lhs == 19 and value.passed
        (pos,) = by_name(checks, "edge_cubic_at_3_positive")
        assert pos.lhs == 19 and pos.passed

    def test_radius_chain_min_example(self):
        checks = check_sign_claims(7, 3, 2)
        (chain,) = by_name(checks, "radius_gap_chain_min")
        assert chain.lhs == Fraction(7, 2) and chain.passed

    def test_deriv_chain_min_example(self):
        checks = check_sign_claims(10, 3, 4)
        (chain,) = by_name(checks, "small_cliques_deriv_chain_min")
        assert chain.lhs == Fraction(235, 9) and chain.passed

    def test_floor_min_at_3_4(self):
        assert floor_quadratic_min_closed_form(3, 4) == Fraction(247, 9)
        checks = check_sign_claims(14, 3, 4)
        (fm,) = by_name(checks, "floor_min_value")
        assert fm.passed
        (fp,) = by_name(checks, "floor_min_positive")
        assert fp.lhs == Fraction(247, 9) and fp.passed

    def test_pivot_zero_is_exact(self):
        for n, s, delta in [(14, 3, 4), (20, 4, 6), (30, 5, 8)]:
            checks = check_sign_claims(n, s, delta)
            (piv,) = by_name(checks, "floor_deriv_zero_at_pivot")
            assert piv.lhs == 0 and piv.passed

    def test_s3_slope_boundary(self):
        checks = check_sign_claims(14, 3, 4)
        (slope,) = by_name(checks, "theta_gap_slope_positive_s3")
        assert slope.lhs == 14 - 4 - 1 and slope.passed
        assert slope.params.get("boundary") == "s=3"
        checks = check_sign_claims(20, 4, 6)
        assert by_name(checks, "theta_gap_vertex_left_of_floor")[0].passed

    def test_out_of_range_claims_are_skipped(self):
        checks = check_sign_claims(8, 2, 2)
        skipped = [c for c in checks if c.passed is None]
        assert skipped
        assert all(c.skipped_reason for c in skipped)


class TestGrid:
    def test_floors(self):
        assert edge_route_floor(2) == 8
        assert edge_route_floor(3) == 14
        assert edge_route_floor(6) == 32
        assert spectral_route_floor(2) == 7
        assert spectral_route_floor(4) == 17
        assert spectral_route_floor(12) == 60

    def test_small_grid_all_pass(self):
        checks = run_identity_grid(delta_max=4, n_extra=4)
        fails = grid_failures(checks)
        assert not fails
        evaluated = [c for c in checks if c.passed is not None]
        assert len(evaluated) > 500

    def test_json_lines_are_well_formed(self):
        checks = run_identity_grid(delta_max=2, n_extra=1)
        for c in checks[:200]:
            blob = json.loads(json.dumps(c.to_json_dict()))
            assert set(blob) >= {"name", "params", "lhs", "rhs", "pass"}

    def test_fraction_encoding(self):
        c = make_check("x", {"q": Fraction(1, 3)}, Fraction(247, 9), 0, "gt")
        d = c.to_json_dict()
        assert d["lhs"] == "247/9" and d["params"]["q"] == "1/3"
        c = make_check("x", {}, Fraction(4, 2), 2)
        assert c.to_json_dict()["lhs"] == 2
