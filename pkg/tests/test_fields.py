"""Field construction, arithmetic, Frobenius, traces, and the dual basis."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linwenger.errors import DegreeMismatch, FieldMismatch, NonPrime, ReducibleModulus
from linwenger.fields import (
    CONWAY_TABLE,
    GF,
    FpMatrix,
    default_modulus,
    fp_invert,
    fp_rank_kernel,
    fp_solve,
    is_irreducible,
    is_prime,
)


class TestConstruction:
    def test_composite_characteristic_rejected(self):
        with pytest.raises(NonPrime):
            GF(4)
        with pytest.raises(NonPrime):
            GF(1)

    def test_bad_degree_rejected(self):
        with pytest.raises(DegreeMismatch):
            GF(2, 0)

    def test_characteristic_bound(self):
        with pytest.raises(NonPrime):
            GF(32771)  # first prime past 2^15

    def test_field_size_bound(self):
        with pytest.raises(DegreeMismatch):
            GF(2, 25)  # 2^25 > 2^24

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ReducibleModulus):
            GF(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x + 1)^2 over F_2

    def test_modulus_degree_must_match(self):
        with pytest.raises(DegreeMismatch):
            GF(2, 2, modulus=(1, 1, 0, 1))

    def test_modulus_must_be_monic(self):
        with pytest.raises(DegreeMismatch):
            GF(3, 2, modulus=(1, 1, 2))

    def test_same_parameters_same_field_object(self):
        assert GF(3, 2) is GF(3, 2)
        assert GF(3, 2) == GF(3, 2, modulus=(2, 2, 1))


class TestPrimeHelpers:
    def test_is_prime_small(self):
        primes = [n for n in range(60) if is_prime(n)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]

    def test_irreducibility_examples(self):
        assert is_irreducible((1, 1, 1), 2)  # x^2 + x + 1
        assert not is_irreducible((1, 0, 1), 2)  # (x + 1)^2
        assert is_irreducible((1, 1, 0, 1), 2)
        assert not is_irreducible((1, 1, 1, 1), 2)  # (x + 1)(x^2 + 1)
        assert is_irreducible((2, 2, 1), 3)
        # degree >= 4 goes through the distinct-degree path
        assert is_irreducible((1, 1, 0, 0, 1), 2)
        assert not is_irreducible((1, 0, 0, 0, 1), 2)  # (x^2 + x + 1)^2 + ... reducible
        assert is_irreducible((2, 10, 8, 0, 1), 11)


class TestGF4:
    def test_multiplication(self):
        F = GF(2, 2)
        t = F.basis[1]
        assert t * t == t + F.one
        assert t * (t + F.one) == F.one  # t * t^2 = t^3 = 1

    def test_traces(self):
        F = GF(2, 2)
        assert F.one.trace() == 0
        assert F.basis[1].trace() == 1
        assert (F.basis[1] + F.one).trace() == 1
        assert F.zero.trace() == 0

    def test_dual_basis_value(self):
        # tr(t^2) = 1 over GF(4), which forces delta_1 = 1 + t, delta_2 = 1
        F = GF(2, 2)
        t = F.basis[1]
        assert F.dual_basis == (F.one + t, F.one)


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3)])
def test_dual_basis_identity(p, e):
    F = GF(p, e)
    for i in range(e):
        for j in range(e):
            assert (F.basis[i] * F.dual_basis[j]).trace() == (1 if i == j else 0)


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (5, 2)])
def test_trace_maps_onto_prime_field_evenly(p, e):
    F = GF(p, e)
    hits = {}
    for x in F.elements():
        hits[x.trace()] = hits.get(x.trace(), 0) + 1
    assert hits == {c: p ** (e - 1) for c in range(p)}


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (3, 2), (7, 1)])
def test_frobenius_matches_powering(p, e):
    F = GF(p, e)
    for x in F.elements():
        assert x.frob(1) == x**p
        assert x.frob(2) == x ** (p**2)


def test_frobenius_fixed_field_is_prime_subfield():
    F = GF(2, 3)
    fixed = [x for x in F.elements() if x.frob(1) == x]
    assert sorted(x.index for x in fixed) == [0, 1]


@settings(max_examples=200)
@given(st.integers(0, 26), st.integers(0, 26))
def test_frobenius_additive_gf27(i, j):
    F = GF(3, 3)
    x, y = F.from_index(i), F.from_index(j)
    assert (x + y).frob(1) == x.frob(1) + y.frob(1)


@settings(max_examples=200)
@given(st.integers(1, 24))
def test_unit_group_order_gf25(i):
    F = GF(5, 2)
    x = F.from_index(i)
    assert x ** (F.q - 1) == F.one
    assert x**-1 * x == F.one


@settings(max_examples=200)
@given(st.integers(0, 48), st.integers(0, 48), st.integers(0, 48))
def test_ring_axioms_gf49(i, j, k):
    F = GF(7, 2)
    x, y, z = F.from_index(i), F.from_index(j), F.from_index(k)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == F.zero


def test_index_roundtrip():
    for F in (GF(2, 3), GF(3, 2)):
        for i in range(F.q):
            assert F.from_index(i).index == i


def test_integer_coercion():
    F = GF(5)
    x = F.from_int(3)
    assert x + 4 == F.from_int(2)
    assert 2 * x == F.from_int(6)
    assert 1 / x == F.from_int(2)  # 3 * 2 = 6 = 1 mod 5
    assert F.from_int(-1) == F.from_int(4)


def test_division_by_zero():
    F = GF(3, 2)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_field_mismatch():
    a = GF(2, 3).one  # Conway modulus x^3 + x + 1
    b = GF(2, 3, modulus=(1, 0, 1, 1)).one  # x^3 + x^2 + 1
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(FieldMismatch):
        GF(3).one * GF(5).one


class TestConwayTable:
    def test_frozen_spot_values(self):
        assert CONWAY_TABLE[(2, 2)] == (1, 1, 1)
        assert CONWAY_TABLE[(2, 6)] == (1, 1, 0, 1, 1, 0, 1)
        assert CONWAY_TABLE[(3, 2)] == (2, 2, 1)
        assert CONWAY_TABLE[(5, 3)] == (3, 3, 0, 1)
        assert CONWAY_TABLE[(7, 4)] == (3, 4, 5, 0, 1)
        assert CONWAY_TABLE[(11, 6)] == (2, 7, 6, 4, 3, 0, 1)

    def test_all_entries_monic_irreducible(self):
        for (p, n), coeffs in CONWAY_TABLE.items():
            assert len(coeffs) == n + 1 and coeffs[-1] == 1
            assert is_irreducible(coeffs, p)

    @pytest.mark.parametrize("p,e", [(2, 2), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
    def test_basis_root_is_primitive(self, p, e):
        # the defining root of a Conway polynomial generates the unit group
        F = GF(p, e)
        t = F.basis[1]
        n = F.q - 1
        acc = F.one
        seen = set()
        for _ in range(n):
            acc = acc * t
            seen.add(acc.index)
        assert len(seen) == n

    def test_untabulated_default_is_lex_smallest_irreducible(self):
        assert (13, 2) not in CONWAY_TABLE
        assert default_modulus(13, 2) == (1, 3, 1)  # x^2 + 3x + 1
        F = GF(13, 2)
        assert F.q == 169


class TestFpLinearAlgebra:
    def test_invert_gram_example(self):
        M = FpMatrix(2, ((0, 1), (1, 1)))
        assert fp_invert(M).rows == ((1, 1), (1, 0))

    def test_invert_singular_raises(self):
        with pytest.raises(ValueError):
            fp_invert(FpMatrix(2, ((1, 1), (1, 1))))

    def test_rank_kernel(self):
        rank, kernel = fp_rank_kernel(FpMatrix(3, ((1, 2), (2, 4))))
        assert rank == 1
        assert len(kernel) == 1
        x, y = kernel[0]
        assert (x + 2 * y) % 3 == 0

    def test_solve_consistent(self):
        M = FpMatrix(5, ((1, 1), (0, 1)))
        sol = fp_solve(M, (3, 2))
        assert sol == (1, 2)

    def test_solve_inconsistent_returns_none(self):
        M = FpMatrix(2, ((1, 1), (1, 1)))
        assert fp_solve(M, (0, 1)) is None

    def test_entries_normalized(self):
        M = FpMatrix(3, ((-1, 4), (7, -6)))
        assert M.rows == ((2, 1), (1, 0))
