from fractions import Fraction

import pytest
from hypothesis import given, settings

from harmspec.charpoly import (
    RatPoly,
    char_poly,
    closed_form,
    closed_form_complete,
    closed_form_complete_bipartite,
    closed_form_cycle,
    closed_form_friendship,
    closed_form_path_proof,
    closed_form_path_statement,
    closed_form_petersen,
    closed_form_star,
    closed_form_windmill4,
    closed_form_windmill_product,
    factored_display,
    graph_char_poly,
    poly_json,
    poly_text,
    rational_roots,
    tridiag_charpoly,
)
from harmspec.families import (
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    dutch_windmill,
    friendship,
    path,
    petersen,
    star,
)
from harmspec.graphs import disjoint_union
from harmspec.harmonic import harmonic_matrix

from conftest import exact_det, graph_strategy

X = RatPoly.x()
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class TestPolyArithmetic:
    def test_recurrence_step(self):
        # One step of the tridiagonal recurrence by hand.
        lhs = (X * X - QUARTER) * X + Fraction(-1, 4) * X
        assert lhs == RatPoly((0, Fraction(-1, 2), 0, 1))

    def test_evaluate(self):
        p = X * X - 1
        assert p.evaluate(1) == 0
        assert p.evaluate(Fraction(1, 2)) == Fraction(-3, 4)

    def test_pow(self):
        p = (X + HALF) ** 2
        assert p == RatPoly((QUARTER, 1, 1))

    def test_zero_and_canonical_form(self):
        assert (X - X).is_zero
        assert RatPoly((1, 0, 0)).degree == 0
        assert RatPoly(()).degree == -1

    def test_scalar_ops(self):
        assert 2 * X + 1 == RatPoly((1, 2))
        assert (X - 1) * (X + 1) == X * X - 1

    def test_immutability(self):
        p = X + 1
        with pytest.raises(AttributeError):
            p.coeffs = ()


class TestCharPoly:
    def test_triangle(self):
        p = char_poly(harmonic_matrix(complete(3)))
        assert p == RatPoly((Fraction(-1, 4), Fraction(-3, 4), 0, 1))

    def test_star4(self):
        # On 4 vertices: x^2 (x^2 - 3/4).
        p = char_poly(harmonic_matrix(star(4)))
        assert p == RatPoly.monomial(2) * (X * X - Fraction(3, 4))

    def test_petersen_exact(self):
        p = graph_char_poly(petersen())
        expected = (X - 1) * (X + Fraction(2, 3)) ** 4 * (X - Fraction(1, 3)) ** 5
        assert p == expected

    def test_zero_matrix(self):
        assert char_poly([[0] * 3 for _ in range(3)]) == RatPoly.monomial(3)

    def test_empty_matrix(self):
        assert char_poly([]) == RatPoly.one()

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            char_poly([[1, 2]])

    @given(graph_strategy(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_monic_degree_trace(self, g):
        p = graph_char_poly(g)
        assert p.degree == g.n
        assert p.leading == 1
        if g.n >= 1:
            assert p.coefficient(g.n - 1) == 0  # zero trace

    @given(graph_strategy(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_second_coefficient_newton(self, g):
        # With zero trace, the x^(n-2) coefficient is minus the sum of
        # squared entries over edges.
        if g.n < 2:
            return
        from harmspec.graphs import degrees

        deg = degrees(g)
        weight_sq = sum(
            Fraction(2, deg[u] + deg[v]) ** 2 for u, v in g.edges()
        )
        p = graph_char_poly(g)
        assert p.coefficient(g.n - 2) == -weight_sq

    @given(graph_strategy(max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_agrees_with_determinant_oracle(self, g):
        # p(t) must equal det(tI - H) at enough points to pin the polynomial.
        m = harmonic_matrix(g)
        p = char_poly(m)
        for t in (0, 1, -1, 2, Fraction(1, 2), Fraction(-3, 7)):
            shifted = [
                [(Fraction(t) if i == j else 0) - m[i][j] for j in range(g.n)]
                for i in range(g.n)
            ]
            assert p.evaluate(t) == exact_det(shifted)


class TestTridiagSequence:
    def test_initial_values(self):
        assert tridiag_charpoly(0) == RatPoly.one()
        assert tridiag_charpoly(1) == X
        assert tridiag_charpoly(2) == X * X - QUARTER

    def test_third_by_hand(self):
        # x(x^2 - 1/4) - (1/4)x
        assert tridiag_charpoly(3) == RatPoly((0, Fraction(-1, 2), 0, 1))

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            tridiag_charpoly(-1)

    @pytest.mark.parametrize("k", range(1, 21))
    def test_matches_tridiagonal_matrix(self, k):
        m = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k - 1):
            m[i][i + 1] = HALF
            m[i + 1][i] = HALF
        assert tridiag_charpoly(k) == char_poly(m)


class TestClosedForms:
    def test_cycle3_expansion(self):
        assert closed_form_cycle(3) == RatPoly((Fraction(-1, 4), Fraction(-3, 4), 0, 1))

    def test_path4_proof_form(self):
        assert closed_form_path_proof(4) == RatPoly(
            (Fraction(16, 81), 0, Fraction(-41, 36), 0, 1)
        )

    def test_path_statement_has_wrong_degree(self):
        assert closed_form_path_statement(6).degree == 5
        assert closed_form_path_proof(6).degree == 6

    def test_windmill4_single_blade_is_cycle4(self):
        assert closed_form_windmill4(1) == RatPoly.monomial(2) * (X * X - 1)
        assert closed_form_windmill4(1) == graph_char_poly(cycle(4))

    @pytest.mark.parametrize("n", range(3, 13))
    def test_cycle_matches_oracle(self, n):
        assert closed_form_cycle(n) == graph_char_poly(cycle(n))

    @pytest.mark.parametrize("n", range(2, 13))
    def test_star_and_complete_match_oracle(self, n):
        assert closed_form_star(n) == graph_char_poly(star(n))
        assert closed_form_complete(n) == graph_char_poly(complete(n))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_friendship_matches_oracle(self, n):
        assert closed_form_friendship(n) == graph_char_poly(friendship(n))

    def test_bipartite_matches_oracle(self):
        for m in range(1, 6):
            for n in range(m, 7):
                assert closed_form_complete_bipartite(m, n) == graph_char_poly(
                    complete_bipartite(m, n)
                )

    def test_windmill_product_only_single_blade(self):
        assert closed_form_windmill_product(5, 1) == graph_char_poly(dutch_windmill(5, 1))
        assert closed_form_windmill_product(5, 2) != graph_char_poly(dutch_windmill(5, 2))

    def test_petersen_closed_form(self):
        assert closed_form_petersen() == graph_char_poly(petersen())

    def test_dispatch(self):
        assert closed_form(FamilySpec("cycle", n=5)) == closed_form_cycle(5)
        assert closed_form(FamilySpec("path", n=6)) == closed_form_path_proof(6)
        assert closed_form(
            FamilySpec("path", n=6), path_variant="statement"
        ) == closed_form_path_statement(6)
        assert closed_form(FamilySpec("dutch_windmill", m=4, n=2)) == closed_form_windmill4(2)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            closed_form_cycle(2)
        with pytest.raises(ValueError):
            closed_form_path_proof(3)
        with pytest.raises(ValueError):
            closed_form_star(1)


@given(graph_strategy(max_n=6), graph_strategy(max_n=6))
@settings(max_examples=30, deadline=None)
def test_disjoint_union_charpoly_product(a, b):
    combined = graph_char_poly(disjoint_union([a, b]))
    assert combined == graph_char_poly(a) * graph_char_poly(b)


class TestDisplay:
    def test_factored_triangle(self):
        p = RatPoly((Fraction(-1, 4), Fraction(-3, 4), 0, 1))
        assert factored_display(p) == "(λ - 1)(λ + 1/2)^2"

    def test_no_rational_roots(self):
        assert factored_display(X * X - 2) == "λ^2 - 2"

    def test_pure_power(self):
        assert factored_display(RatPoly.monomial(5)) == "λ^5"

    def test_mixed(self):
        p = RatPoly.monomial(2) * (X * X - Fraction(3, 4))
        assert factored_display(p) == "λ^2(λ^2 - 3/4)"

    def test_non_monic_constant_factor(self):
        assert factored_display(2 * (X - 1) * (X + 1)) == "2(λ - 1)(λ + 1)"

    def test_rational_roots_multiplicities(self):
        p = (X - 1) * (X + HALF) ** 2
        assert rational_roots(p) == [(Fraction(1), 1), (Fraction(-1, 2), 2)]

    def test_high_multiplicity_roots_found(self):
        p = closed_form_complete(12)
        assert rational_roots(p) == [(Fraction(1), 1), (Fraction(-1, 11), 11)]

    def test_poly_text(self):
        p = RatPoly((Fraction(16, 81), 0, Fraction(-41, 36), 0, 1))
        assert poly_text(p) == "λ^4 - 41/36 λ^2 + 16/81"
        assert poly_text(RatPoly.zero()) == "0"

    def test_poly_json(self):
        payload = poly_json(X * X - HALF)
        assert payload["degree"] == 2
        assert payload["coefficients"][0] == {"num": -1, "den": 2}
        assert payload["coefficients"][2] == {"num": 1, "den": 1}
