# Tests del modelo de Araki-Woods libre: involución, Wick, estado y flujo
# Ejecutar con: pytest tests/test_araki_woods.py -v

import numpy as np
import pytest


# =============================================================================
# TESTS DEL MODELO
# =============================================================================

@pytest.mark.unit
class TestModel:
    """Construcción de (A, J, I, K_R)"""

    def test_trivial_representation(self, trivial_model):
        assert np.allclose(trivial_model.a_matrix, np.eye(2))
        xi = np.array([1.0 + 2.0j, -1j])
        assert np.allclose(trivial_model.involution(xi), np.conj(xi))

    def test_pair_involution(self, make_model):
        model = make_model(pairs=(2.0,))
        assert np.allclose(model.eigenvalues, [2.0, 0.5])
        plus, minus = np.eye(2, dtype=complex)
        assert np.allclose(model.involution(plus), 2**-0.5 * minus)
        assert np.allclose(model.involution(minus), 2**0.5 * plus)

    def test_residuals_vanish(self, make_model):
        from core.services.araki_woods import model_residuals
        model = make_model(pairs=(2.0, 3.5), trivial=2, max_degree=1)
        residuals = model_residuals(model)
        assert set(residuals) == {"jaj", "ii", "istar_i", "kr_fixed"}
        assert max(residuals.values()) < 1e-12

    def test_lambda_must_exceed_one(self, make_model):
        from core.domain.errors import PreconditionError
        with pytest.raises(PreconditionError) as exc:
            make_model(pairs=(1.0,))
        assert exc.value.details["check"] == "lambda"

    @pytest.mark.parametrize("value", [float("nan"), float("inf")])
    def test_non_finite_lambda_rejected(self, value):
        from pydantic import ValidationError
        from core.domain import RepSpec
        with pytest.raises(ValidationError):
            RepSpec.model_validate({"pairs": [{"lambda": value}], "trivial_dim": 1})

    def test_build_model_guards_nan(self):
        from core.domain import RepSpec
        from core.domain.errors import PreconditionError
        from core.domain.model import EigenPair
        from core.services.araki_woods import build_model
        pair = EigenPair.model_construct(lambda_=float("nan"), multiplicity=1)
        spec = RepSpec.model_construct(pairs=[pair], trivial_dim=0, max_degree=2)
        with pytest.raises(PreconditionError) as exc:
            build_model(spec)
        assert exc.value.details["check"] == "lambda"

    def test_empty_spec_rejected(self):
        from pydantic import ValidationError
        from core.domain import RepSpec
        with pytest.raises(ValidationError):
            RepSpec(pairs=[], trivial_dim=0)

    def test_spec_alias_lambda(self):
        from core.domain import RepSpec
        spec = RepSpec.model_validate({"pairs": [{"lambda": 2.0, "multiplicity": 2}], "trivial_dim": 1})
        assert spec.dim == 5
        assert spec.max_degree == 4

    def test_multiplicity_layout(self, make_model):
        model = make_model(pairs=(2.0, 3.0), trivial=1, max_degree=1)
        assert model.pair_indices == ((0, 1), (2, 3))
        assert model.trivial_indices == (4,)
        assert np.isclose(model.pair_eigenvalue(1), 3.0)

    def test_fixed_point_dimension(self, pair_model, trivial_model):
        from core.services.araki_woods import fixed_point_dimension
        assert fixed_point_dimension(pair_model) == 3
        assert fixed_point_dimension(trivial_model) == 2

    def test_involution_is_conjugate_linear(self, pair_model):
        from core.services.araki_woods import involution_apply
        for xi in pair_model.kr_basis:
            assert np.allclose(involution_apply(pair_model, xi), xi)
            assert np.allclose(involution_apply(pair_model, 1j * xi), -1j * xi)

    def test_in_real_subspace(self, pair_model):
        from core.services.araki_woods import in_real_subspace
        assert in_real_subspace(pair_model, pair_model.kr_basis[1])
        assert not in_real_subspace(pair_model, [1.0, 0.0, 0.0])

    def test_direct_sum_keeps_structure(self, make_model):
        from core.services.araki_woods import direct_sum, model_residuals
        first = make_model(pairs=(2.0,), max_degree=1)
        second = make_model(trivial=1, max_degree=1)
        total = direct_sum(first, second)
        assert total.dim == 3
        assert total.trivial_indices == (2,)
        assert len(total.kr_basis) == 3
        assert max(model_residuals(total).values()) < 1e-12


# =============================================================================
# TESTS DE OPERADORES DE WICK
# =============================================================================

@pytest.mark.unit
class TestWick:
    """Palabras de Wick y correspondencia símbolo <-> operador"""

    def test_empty_word_is_identity(self, pair_model):
        from core.services.araki_woods import wick_operator
        w = wick_operator(pair_model, ())
        assert np.allclose(w.to_dense(), np.eye(pair_model.space.total_dim))

    def test_single_letter_is_field(self, pair_model):
        from core.services.araki_woods import basis_vector, field_operator, wick_operator
        w = wick_operator(pair_model, (1,))
        field = field_operator(pair_model, basis_vector(pair_model, 1))
        assert np.allclose(w.to_dense(), field.to_dense())

    def test_wick_symbol_is_word(self, pair_model):
        from core.domain.fock import FockVector
        from core.services.araki_woods import operator_to_symbol, wick_operator
        word = (0, 2, 1)
        symbol = operator_to_symbol(pair_model, wick_operator(pair_model, word))
        expected = FockVector.from_word(pair_model.space, word)
        assert np.allclose(symbol.vector.amplitudes, expected.amplitudes)

    def test_creation_product_symbol(self, pair_model, rng):
        from core.services.araki_woods import operator_to_symbol
        from core.services.fock import compose, creation
        xi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        eta = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        op = compose(creation(pair_model.space, xi), creation(pair_model.space, eta))
        symbol = operator_to_symbol(pair_model, op)
        assert np.allclose(symbol.vector.block(2), np.kron(xi, eta))
        assert np.allclose(symbol.vector.block(0), 0.0)

    def test_identity_symbol_is_vacuum(self, pair_model):
        from core.services.araki_woods import operator_to_symbol
        from core.services.fock import identity
        symbol = operator_to_symbol(pair_model, identity(pair_model.space))
        assert symbol.vector.vacuum_amplitude == 1.0
        assert np.isclose(symbol.vector.norm, 1.0)

    def test_symbol_round_trip(self, pair_model, rng):
        from core.services.araki_woods import operator_to_symbol, random_symbol, symbol_to_operator
        symbol = random_symbol(pair_model, rng, max_degree=2)
        back = operator_to_symbol(pair_model, symbol_to_operator(pair_model, symbol))
        assert np.allclose(back.vector.amplitudes, symbol.vector.amplitudes)

    @pytest.mark.parametrize("word", [(0, 1), (1, 0), (2, 2), (0, 1, 2), (1, 1, 0)])
    def test_wick_recursion(self, pair_model, word):
        from core.services.araki_woods import wick_recursion_residual
        assert wick_recursion_residual(pair_model, word) < 1e-12

    def test_recursion_needs_two_letters(self, pair_model):
        from core.services.araki_woods import wick_recursion_residual
        with pytest.raises(ValueError):
            wick_recursion_residual(pair_model, (0,))

    def test_word_above_truncation(self, pair_model):
        from core.domain.errors import DegreeError
        from core.services.araki_woods import wick_operator
        with pytest.raises(DegreeError):
            wick_operator(pair_model, (0, 0, 0, 0))


# =============================================================================
# TESTS DEL ESTADO Y LOS MOMENTOS
# =============================================================================

@pytest.mark.unit
class TestState:
    """Función de dos puntos y momentos semicirculares"""

    def test_two_point_matches_formula(self, pair_model, rng):
        from core.services.araki_woods import two_point, two_point_formula
        for _ in range(5):
            xi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            eta = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            assert np.isclose(two_point(pair_model, xi, eta), two_point_formula(pair_model, xi, eta))

    def test_two_point_on_real_subspace(self, pair_model):
        from core.services.araki_woods import two_point
        basis = pair_model.kr_basis
        assert np.isclose(two_point(pair_model, basis[0], basis[0]), 1.0)
        assert np.isclose(two_point(pair_model, basis[0], basis[2]), 0.0)

    @pytest.mark.parametrize("k,expected", [(1, 1), (2, 2), (3, 5)])
    def test_semicircular_moments(self, make_model, k, expected):
        from core.services.araki_woods import semicircular_moment
        model = make_model(pairs=(2.0,), max_degree=6)
        assert np.isclose(semicircular_moment(model, model.kr_basis[0], k), expected)

    def test_odd_moments_vanish(self, make_model):
        from core.services.araki_woods import field_moment
        model = make_model(trivial=1, max_degree=5)
        for p in (1, 3, 5):
            assert abs(field_moment(model, model.kr_basis[0], p)) < 1e-14

    def test_moment_requires_real_unit_vector(self, pair_model):
        from core.domain.errors import PreconditionError
        from core.services.araki_woods import semicircular_moment
        with pytest.raises(PreconditionError):
            semicircular_moment(pair_model, [1.0, 0.0, 0.0], 1)
        with pytest.raises(PreconditionError):
            semicircular_moment(pair_model, 2 * pair_model.kr_basis[0], 1)

    def test_moment_degree_error(self, pair_model):
        from core.domain.errors import DegreeError
        from core.services.araki_woods import semicircular_moment
        with pytest.raises(DegreeError) as exc:
            semicircular_moment(pair_model, pair_model.kr_basis[0], 2)
        assert exc.value.details["required"] == 4

    def test_moment_table(self, make_model):
        from core.services.araki_woods import moment_table
        model = make_model(pairs=(2.0,), max_degree=6)
        rows = moment_table(model, 3)
        assert [row.k for row in rows] == [1, 2, 3]
        assert [row.catalan for row in rows] == [1, 2, 5]
        assert max(row.abs_error for row in rows) < 1e-10
        assert all(abs(row.odd_moment) < 1e-14 for row in rows)

    def test_moment_table_truncation(self, pair_model):
        from core.domain.errors import DegreeError
        from core.services.araki_woods import moment_table
        with pytest.raises(DegreeError):
            moment_table(pair_model, 2)


# =============================================================================
# TESTS DEL FLUJO MODULAR
# =============================================================================

@pytest.mark.unit
class TestModularFlow:
    """Grupo F(U_t) con U_t = A^{it}"""

    def test_flow_at_zero_is_identity(self, pair_model, rng):
        from core.services.araki_woods import modular_flow, random_symbol
        symbol = random_symbol(pair_model, rng)
        assert np.allclose(modular_flow(pair_model, 0.0, symbol).vector.amplitudes, symbol.vector.amplitudes)

    def test_trivial_flow_is_identity(self, trivial_model):
        from core.services.araki_woods import flow_operator
        dense = flow_operator(trivial_model, 1.7).to_dense()
        assert np.allclose(dense, np.eye(trivial_model.space.total_dim))

    def test_flow_phases_on_pair(self, pair_model):
        from core.services.araki_woods import flow_phases
        phases = flow_phases(pair_model, 1.0, 1)
        assert np.allclose(phases, [2.0**1j, 0.5**1j, 1.0])
        assert np.allclose(np.abs(flow_phases(pair_model, 0.3, 2)), 1.0)

    @pytest.mark.parametrize("t", [0.3, 1.0, 2.0])
    def test_flow_rotates_fields(self, pair_model, rng, t):
        from core.services.araki_woods import flow_field_residual
        zeta = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        assert flow_field_residual(pair_model, t, zeta) < 1e-12

    def test_state_invariance(self, pair_model, rng):
        from core.services.araki_woods import random_symbol, state_invariance_residual, symbol_to_operator
        x = symbol_to_operator(pair_model, random_symbol(pair_model, rng, max_degree=2))
        assert state_invariance_residual(pair_model, 0.7, x) < 1e-12
