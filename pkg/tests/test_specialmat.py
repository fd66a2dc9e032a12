import random
from fractions import Fraction
from itertools import combinations

import pytest

from hilbx.errors import DomainError
from hilbx.exactmat import Matrix, mat_det_exact, mat_inv_exact
from hilbx.specialmat import SpecialSpec, build, closed_det, closed_inv, hilbert_inverse_int_rows

F = Fraction


def admissible_cauchy(rng, n):
    """Distinct x, distinct y, no x_i + y_j = 0."""
    while True:
        xs = rng.sample(range(-12, 13), n)
        ys = rng.sample(range(-12, 13), n)
        den = rng.randint(1, 4)
        xs = [F(v, den) for v in xs]
        ys = [F(v, den) + F(1, den * 7) for v in ys]
        if all(x + y != 0 for x in xs for y in ys):
            return SpecialSpec.cauchy(xs, ys)


def admissible_vandermonde(rng, n):
    vals = rng.sample([v for v in range(-12, 13) if v], n)
    den = rng.randint(1, 3)
    return SpecialSpec.vandermonde([F(v, den) for v in vals])


def admissible_combinatorial(rng, n):
    while True:
        x = F(rng.randint(-9, 9), rng.randint(1, 3))
        y = F(rng.randint(-9, 9), rng.randint(1, 3))
        if x != 0 and x + n * y != 0:
            return SpecialSpec.combinatorial(n, x, y)


class TestBuild:
    def test_hilbert_rows(self):
        h3 = build(SpecialSpec.hilbert(3))
        assert list(h3.row(0)) == [F(1), F(1, 2), F(1, 3)]
        assert list(h3.row(2)) == [F(1, 3), F(1, 4), F(1, 5)]

    def test_combinatorial_delta_only(self):
        assert build(SpecialSpec.combinatorial(2, 1, 0)) == Matrix.identity(2)

    def test_cauchy_specializes_to_hilbert(self):
        cauchy = build(SpecialSpec.cauchy([1, 2], [0, 1]))
        assert cauchy == build(SpecialSpec.hilbert(2))

    def test_cauchy_specializes_to_hilbert_general(self):
        for n in range(1, 7):
            spec = SpecialSpec.cauchy(list(range(1, n + 1)), list(range(n)))
            assert build(spec) == build(SpecialSpec.hilbert(n))

    def test_vandermonde_powers_from_one(self):
        v = build(SpecialSpec.vandermonde([1, 2, 3]))
        assert v.to_rows() == [[1, 2, 3], [1, 4, 9], [1, 8, 27]]

    def test_cauchy_zero_entry_names_position(self):
        with pytest.raises(DomainError, match=r"\(2,1\)"):
            build(SpecialSpec.cauchy([1, -3], [3, 5]))


class TestClosedDet:
    def test_hilbert_small(self):
        assert closed_det(SpecialSpec.hilbert(1)) == 1
        assert closed_det(SpecialSpec.hilbert(3)) == F(1, 2160)

    def test_vandermonde_example(self):
        assert closed_det(SpecialSpec.vandermonde([1, 2, 3])) == 12

    def test_combinatorial_example(self):
        spec = SpecialSpec.combinatorial(3, 2, 1)
        assert closed_det(spec) == 20
        assert mat_det_exact(build(spec)) == 20

    def test_combinatorial_degenerate_is_zero_not_error(self):
        assert closed_det(SpecialSpec.combinatorial(3, 0, 5)) == 0
        assert closed_det(SpecialSpec.combinatorial(2, 4, -2)) == 0

    def test_cauchy_degenerate_entry_rejected(self):
        with pytest.raises(DomainError):
            closed_det(SpecialSpec.cauchy([1, 2], [-1, 4]))

    def test_matches_oracle_all_families(self):
        rng = random.Random(23)
        for n in range(1, 13):
            spec = SpecialSpec.hilbert(n)
            assert closed_det(spec) == mat_det_exact(build(spec))
        for _ in range(40):
            n = rng.randint(1, 6)
            for spec in (
                admissible_cauchy(rng, n),
                admissible_vandermonde(rng, n),
                admissible_combinatorial(rng, n),
            ):
                assert closed_det(spec) == mat_det_exact(build(spec))


class TestClosedInv:
    def test_hilbert2_literal(self):
        assert closed_inv(SpecialSpec.hilbert(2)) == Matrix.from_rows([[4, -6], [-6, 12]])

    def test_hilbert3_literal(self):
        expected = Matrix.from_rows(
            [[9, -36, 30], [-36, 192, -180], [30, -180, 180]]
        )
        assert closed_inv(SpecialSpec.hilbert(3)) == expected
        assert mat_inv_exact(build(SpecialSpec.hilbert(3))) == expected

    def test_combinatorial_delta_only(self):
        assert closed_inv(SpecialSpec.combinatorial(2, 1, 0)) == Matrix.identity(2)

    def test_vandermonde_matches_oracle(self):
        spec = SpecialSpec.vandermonde([1, 2, 3])
        assert closed_inv(spec) == mat_inv_exact(build(spec))

    def test_matches_oracle_all_families(self):
        rng = random.Random(29)
        for n in range(1, 13):
            spec = SpecialSpec.hilbert(n)
            assert closed_inv(spec) == mat_inv_exact(build(spec))
        for _ in range(20):
            n = rng.randint(1, 6)
            for spec in (
                admissible_cauchy(rng, n),
                admissible_vandermonde(rng, n),
                admissible_combinatorial(rng, n),
            ):
                assert closed_inv(spec) == mat_inv_exact(build(spec))

    def test_degenerate_parameters_rejected_before_arithmetic(self):
        with pytest.raises(DomainError, match="distinct"):
            closed_inv(SpecialSpec.vandermonde([1, 2, 1]))
        with pytest.raises(DomainError, match="nonzero"):
            closed_inv(SpecialSpec.vandermonde([0, 1, 2]))
        with pytest.raises(DomainError, match="distinct"):
            closed_inv(SpecialSpec.cauchy([1, 1], [2, 3]))
        with pytest.raises(DomainError, match="x != 0"):
            closed_inv(SpecialSpec.combinatorial(2, 0, 3))
        with pytest.raises(DomainError, match="n\\*y"):
            closed_inv(SpecialSpec.combinatorial(2, 4, -2))


class TestHilbertProperties:
    def test_inverse_entries_are_integers(self):
        for n in range(1, 41):
            inv = hilbert_inverse_int_rows(n)
            assert all(isinstance(v, int) for row in inv for v in row)
            mat = closed_inv(SpecialSpec.hilbert(n))
            assert all(e.denominator == 1 for e in mat.entries)

    def test_determinant_is_unit_fraction(self):
        for n in range(1, 21):
            det = closed_det(SpecialSpec.hilbert(n))
            assert det.numerator == 1

    def test_symmetric_and_positive_definite(self):
        for n in range(1, 11):
            h = build(SpecialSpec.hilbert(n))
            assert h == h.transpose()
            for k in range(1, n + 1):
                minor = Matrix(k, k, [h.at(i, j) for i in range(k) for j in range(k)])
                assert mat_det_exact(minor) > 0

    def test_totally_positive_small_orders(self):
        for n in range(1, 5):
            h = build(SpecialSpec.hilbert(n))
            for k in range(1, n + 1):
                for rows in combinations(range(n), k):
                    for cols in combinations(range(n), k):
                        sub = Matrix(k, k, [h.at(i, j) for i in rows for j in cols])
                        assert mat_det_exact(sub) > 0

    def test_order_validation(self):
        with pytest.raises(DomainError):
            SpecialSpec.hilbert(0)
        with pytest.raises(DomainError):
            hilbert_inverse_int_rows(0)
