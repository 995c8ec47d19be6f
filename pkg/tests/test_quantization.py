# Tests de cuantización: Γ̃(T), compatibilidad con I, bandas y red c.m.a.p.
# Ejecutar con: pytest tests/test_quantization.py -v

import numpy as np
import pytest


# =============================================================================
# TESTS DE PRIMERA Y SEGUNDA CUANTIZACIÓN
# =============================================================================

@pytest.mark.unit
class TestFirstQuantization:
    """Γ̃(T) = 1 ⊕ ⊕ T^{⊗n}"""

    def test_identity(self):
        from core.services.fock import make_fock
        from core.services.quantization import first_quantization
        space = make_fock(2, 3)
        assert np.allclose(first_quantization(np.eye(2), space).to_dense(), np.eye(space.total_dim))

    def test_scaled_identity_is_geometric_multiplier(self):
        from core.services.fock import make_fock
        from core.services.quantization import first_quantization
        space = make_fock(2, 3)
        t = 0.4
        dense = first_quantization(np.exp(-t) * np.eye(2), space).to_dense()
        assert np.allclose(np.diag(dense), np.exp(-t * space.degrees))

    def test_zero_is_vacuum_projection(self):
        from core.services.fock import make_fock
        from core.services.quantization import first_quantization
        space = make_fock(2, 2)
        dense = first_quantization(np.zeros((2, 2)), space).to_dense()
        expected = np.zeros((space.total_dim, space.total_dim))
        expected[0, 0] = 1.0
        assert np.allclose(dense, expected)

    def test_rejects_non_contraction(self):
        from core.domain.errors import CompatibilityError
        from core.services.fock import make_fock
        from core.services.quantization import first_quantization
        with pytest.raises(CompatibilityError) as exc:
            first_quantization(2 * np.eye(2), make_fock(2, 1))
        assert np.isclose(exc.value.details["norm"], 2.0)

    def test_rejects_wrong_shape(self):
        from core.domain.errors import PreconditionError
        from core.services.fock import make_fock
        from core.services.quantization import first_quantization
        with pytest.raises(PreconditionError):
            first_quantization(np.eye(3), make_fock(2, 1))

    def test_functoriality(self, rng):
        from core.services.fock import make_fock
        from core.services.quantization import functoriality_residual
        s = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        t = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        s /= np.linalg.norm(s, 2)
        t /= np.linalg.norm(t, 2)
        assert functoriality_residual(s, t, make_fock(2, 3)) < 1e-12

    def test_apply_tensor_power_matches_kron(self, rng):
        from core.services.quantization import apply_tensor_power, tensor_power
        t = rng.standard_normal((2, 2))
        block = rng.standard_normal(8)
        assert np.allclose(apply_tensor_power(t, block, 3), tensor_power(t, 3) @ block)

    def test_apply_tensor_power_rectangular(self, rng):
        from core.services.quantization import apply_tensor_power
        t = rng.standard_normal((3, 2))
        block = rng.standard_normal(4)
        out = apply_tensor_power(t, block, 2)
        assert out.shape == (9,)
        assert np.allclose(out, np.kron(t, t) @ block)


@pytest.mark.unit
class TestCompatibility:
    """ITI = T y Γ(T) sobre símbolos"""

    def test_identity_defect(self, pair_model):
        from core.services.quantization import i_compatibility_defect
        assert i_compatibility_defect(pair_model, np.eye(3)) < 1e-12

    def test_trivial_real_diagonal(self, trivial_model):
        from core.services.quantization import i_compatibility_defect
        assert i_compatibility_defect(trivial_model, np.diag([0.3, -0.5])) < 1e-12

    def test_pair_half_projection_defect(self, make_model):
        from core.services.quantization import i_compatibility_defect, iti
        model = make_model(pairs=(2.0,))
        t = np.diag([1.0, 0.0])
        assert np.allclose(iti(model, t), np.diag([0.0, 1.0]))
        assert i_compatibility_defect(model, t) > 0.5

    def test_contraction_spec(self, pair_model):
        from core.domain.errors import CompatibilityError
        from core.services.quantization import contraction_spec
        spec = contraction_spec(0.5 * np.eye(3), pair_model)
        assert np.isclose(spec.norm_bound, 0.5)
        assert spec.i_defect < 1e-12
        assert spec.rank == 3
        with pytest.raises(CompatibilityError):
            contraction_spec(1.5 * np.eye(3))

    def test_random_compatible_contraction(self, pair_model, rng):
        from core.services.quantization import (
            conjugation_commutation_residual,
            i_compatibility_defect,
            random_compatible_contraction,
        )
        for _ in range(5):
            t = random_compatible_contraction(pair_model, rng)
            assert np.linalg.norm(t, 2) <= 1.0 + 1e-12
            assert i_compatibility_defect(pair_model, t) < 1e-12
            assert conjugation_commutation_residual(pair_model, t) < 1e-10

    def test_second_quantize_identity(self, pair_model, rng):
        from core.services.araki_woods import random_symbol
        from core.services.quantization import second_quantize_symbol
        symbol = random_symbol(pair_model, rng)
        out = second_quantize_symbol(pair_model, np.eye(3), symbol)
        assert np.allclose(out.vector.amplitudes, symbol.vector.amplitudes)

    def test_second_quantize_field(self, pair_model, rng):
        from core.services.araki_woods import basis_vector, field_operator, operator_to_symbol
        from core.services.quantization import random_compatible_contraction, second_quantize_symbol
        t = random_compatible_contraction(pair_model, rng)
        w = basis_vector(pair_model, 2) + 0.5j * basis_vector(pair_model, 0)
        symbol = operator_to_symbol(pair_model, field_operator(pair_model, w))
        mapped = second_quantize_symbol(pair_model, t, symbol)
        expected = operator_to_symbol(pair_model, field_operator(pair_model, t @ w))
        assert np.allclose(mapped.vector.amplitudes, expected.vector.amplitudes)

    def test_second_quantize_rejects_incompatible(self, make_model, rng):
        from core.domain.errors import CompatibilityError
        from core.services.araki_woods import random_symbol
        from core.services.quantization import second_quantize_symbol
        model = make_model(pairs=(2.0,))
        with pytest.raises(CompatibilityError) as exc:
            second_quantize_symbol(model, np.diag([1.0, 0.0]), random_symbol(model, rng))
        assert exc.value.details["i_defect"] > 0.5


@pytest.mark.unit
class TestToeplitzFunctor:
    """Γ̃ sobre monomios de creación y aniquilación"""

    def _monomials(self, rng):
        def vec():
            return rng.standard_normal(2) + 1j * rng.standard_normal(2)

        return [([vec()], []), ([], [vec()]), ([vec(), vec()], [vec()]), ([vec()], [vec(), vec()])]

    def test_unitary(self, rng):
        from core.services.fock import make_fock
        from core.services.quantization import toeplitz_functor_check
        u, _ = np.linalg.qr(rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)))
        report = toeplitz_functor_check(make_fock(2, 3), u, self._monomials(rng))
        assert report.name == "toeplitz_functor_unitary"
        assert report.cases == 4
        assert report.residual < 1e-12

    def test_projection(self, rng):
        from core.services.fock import make_fock
        from core.services.quantization import toeplitz_functor_check
        report = toeplitz_functor_check(make_fock(2, 3), np.diag([1.0, 0.0]), self._monomials(rng))
        assert report.name == "toeplitz_functor_projection"
        assert report.residual < 1e-12

    def test_rejects_general_contraction(self, rng):
        from core.domain.errors import PreconditionError
        from core.services.fock import make_fock
        from core.services.quantization import toeplitz_functor_check
        with pytest.raises(PreconditionError) as exc:
            toeplitz_functor_check(make_fock(2, 2), 0.5 * np.eye(2), self._monomials(rng))
        assert exc.value.details["check"] == "contraction_kind"


# =============================================================================
# TESTS DE BANDAS ESPECTRALES
# =============================================================================

@pytest.mark.unit
class TestBands:
    """Aproximantes de rango finito compatibles con I"""

    def test_single_pair_vector(self, pair_model):
        from core.services.quantization import band_approximant
        spec = band_approximant(pair_model, [pair_model.kr_basis[0]], 0.5)
        assert spec.rank == 2
        assert spec.bands == ("pair0(λ=2)",)
        assert spec.i_defect < 1e-12
        assert np.allclose(spec.matrix @ pair_model.kr_basis[0], pair_model.kr_basis[0])

    def test_large_epsilon_gives_zero(self, pair_model):
        from core.services.quantization import band_approximant
        spec = band_approximant(pair_model, list(pair_model.kr_basis), 2.0)
        assert spec.rank == 0
        assert spec.bands == ()

    def test_trivial_span(self, make_model):
        from core.services.quantization import band_approximant
        model = make_model(trivial=3, max_degree=1)
        f = np.array([1.0, 1j, 0.0]) / np.sqrt(2)
        spec = band_approximant(model, [f], 0.1)
        assert spec.bands == ("trivial",)
        assert np.allclose(spec.matrix, np.diag([1.0, 1.0, 0.0]))
        assert spec.i_defect < 1e-12

    def test_full_family_gives_identity(self, pair_model):
        from core.services.quantization import approximation_residual, band_approximant
        spec = band_approximant(pair_model, list(pair_model.kr_basis), 1e-3)
        assert np.allclose(spec.matrix, np.eye(3))
        assert approximation_residual(spec.matrix, pair_model.kr_basis) < 1e-12

    def test_minimal_rank_prefers_small_pair(self, make_model):
        from core.services.quantization import band_approximant
        model = make_model(pairs=(2.0, 3.0), trivial=1, max_degree=1)
        # sólo el segundo par contiene a f
        spec = band_approximant(model, [model.kr_basis[2]], 0.1)
        assert spec.bands == ("pair1(λ=3)",)
        assert spec.rank == 2

    def test_greedy_fallback(self, make_model, monkeypatch, caplog):
        from config.settings import settings
        from core.services.quantization import approximation_residual, band_approximant
        monkeypatch.setattr(settings.multipliers, "band_exhaustive_limit", 0)
        model = make_model(pairs=(2.0, 3.0), trivial=1, max_degree=1)
        family = [model.kr_basis[0], model.kr_basis[4]]
        spec = band_approximant(model, family, 0.1)
        assert "voraz" in caplog.text
        assert approximation_residual(spec.matrix, family) <= 0.1 + 1e-12
        assert "pair1(λ=3)" not in spec.bands

    def test_band_units(self, pair_model):
        from core.services.quantization import band_units
        units = band_units(pair_model, list(pair_model.kr_basis))
        assert [unit.name for unit in units] == ["pair0(λ=2)", "trivial"]
        assert [unit.rank for unit in units] == [2, 1]

    def test_invalid_inputs(self, pair_model):
        from core.domain.errors import PreconditionError, ValidationError
        from core.services.quantization import band_approximant
        with pytest.raises(PreconditionError):
            band_approximant(pair_model, [pair_model.kr_basis[0]], 0.0)
        with pytest.raises(ValidationError):
            band_approximant(pair_model, [np.ones(2)], 0.5)

    def test_band_operator(self, make_model):
        from core.services.quantization import band_operator
        model = make_model(pairs=(2.0, 2.2), max_degree=1)
        delta = 0.1
        spec, deviation = band_operator(model, [0, 1], delta)
        assert np.isclose(spec.norm_bound, 1.0 / 1.1)
        assert spec.i_defect < 1e-12
        assert deviation < 4 * delta / 2.0
        assert spec.bands == ("pair0(λ=2)", "pair1(λ=2.2)")

    def test_band_operator_errors(self, make_model):
        from core.domain.errors import PreconditionError, ValidationError
        from core.services.quantization import band_operator
        model = make_model(pairs=(2.0, 2.2), max_degree=1)
        with pytest.raises(ValidationError):
            band_operator(model, [0], -0.1)
        with pytest.raises(PreconditionError):
            band_operator(model, [], 0.1)
        with pytest.raises(PreconditionError):
            band_operator(model, [5], 0.1)
        with pytest.raises(PreconditionError) as exc:
            band_operator(model, [0, 1], 0.05)
        assert exc.value.details["check"] == "band_width"

    def test_zero_width_band_is_exact(self, pair_model):
        from core.services.quantization import band_operator
        spec, deviation = band_operator(pair_model, [0], 0.0)
        assert deviation == 0.0
        assert spec.rank == 2


# =============================================================================
# TESTS DE LA RED C.M.A.P.
# =============================================================================

@pytest.mark.unit
class TestCmap:
    """m_φ ∘ Γ(T) con rango y certificado"""

    def test_requires_finite_support(self, pair_model):
        from core.domain.errors import PreconditionError
        from core.domain.radial import RadialSymbol
        from core.services.quantization import cmap_map
        with pytest.raises(PreconditionError) as exc:
            cmap_map(pair_model, RadialSymbol(c1=1.0), np.eye(3))
        assert exc.value.details["check"] == "finite_support"

    def test_vacuum_cutoff_rank_one(self, pair_model):
        from core.services.multipliers import cutoff_symbol
        from core.services.quantization import cmap_map
        element = cmap_map(pair_model, cutoff_symbol(0), np.eye(3))
        assert element.rank == 1
        assert np.isclose(element.certificate, 1.0)

    def test_rank_counts_tensor_powers(self, pair_model):
        from core.services.multipliers import cutoff_symbol, radial_norm
        from core.services.quantization import band_approximant, cmap_map
        band = band_approximant(pair_model, [pair_model.kr_basis[0]], 0.5)
        element = cmap_map(pair_model, cutoff_symbol(2), band)
        assert element.rank == 1 + 2 + 4
        assert np.isclose(element.certificate, radial_norm(cutoff_symbol(2)).value)

    def test_apply_identity(self, pair_model, rng):
        from core.services.araki_woods import random_symbol
        from core.services.multipliers import cutoff_symbol
        from core.services.quantization import cmap_map
        symbol = random_symbol(pair_model, rng)
        element = cmap_map(pair_model, cutoff_symbol(pair_model.max_degree), np.eye(3))
        assert np.allclose(element(symbol).vector.amplitudes, symbol.vector.amplitudes)

    def test_apply_scales_degrees(self, pair_model):
        from core.domain.fock import FockVector
        from core.domain.radial import RadialSymbol
        from core.services.quantization import cmap_map
        element = cmap_map(pair_model, RadialSymbol(psi=[1.0, 0.5, 0.25]), 0.5 * np.eye(3))
        word = FockVector.from_word(pair_model.space, (0, 2))
        out = element.apply(word)
        assert np.allclose(out.amplitudes, 0.25 * 0.25 * word.amplitudes)

    def test_rejects_incompatible(self, make_model):
        from core.domain.errors import CompatibilityError
        from core.services.multipliers import cutoff_symbol
        from core.services.quantization import cmap_map
        model = make_model(pairs=(2.0,))
        with pytest.raises(CompatibilityError):
            cmap_map(model, cutoff_symbol(1), np.diag([1.0, 0.0]))

    def test_net_element(self, pair_model):
        from core.services.quantization import cmap_net_element
        report = cmap_net_element(pair_model, 3)
        assert report.band_rank == 3
        assert report.certificate <= 1.0 + 1.0 / 3
        assert report.rank == sum(3**k for k in range(report.d + 1))
        assert np.isclose(report.probe_residual, 1.0 - np.exp(-2.0 / 3))

    def test_net_residual_decreases(self, pair_model):
        from core.services.quantization import cmap_net_element
        first = cmap_net_element(pair_model, 1)
        third = cmap_net_element(pair_model, 3)
        # con ε = 1 la banda vacía basta y el elemento anula K_R
        assert first.band_rank == 0
        assert np.isclose(first.probe_residual, 1.0)
        assert third.probe_residual < first.probe_residual

    def test_net_element_custom_epsilon(self, pair_model):
        from core.services.quantization import cmap_net_element
        report = cmap_net_element(pair_model, 1, epsilon=0.5)
        assert report.band_rank == 2

    def test_haagerup_split(self, pair_model):
        from core.services.quantization import haagerup_split
        near = haagerup_split(pair_model, 0.5, np.eye(3), 1)
        far = haagerup_split(pair_model, 0.5, np.eye(3), 10)
        assert near.finite_rank == 1 + 3
        assert far.finite_rank == sum(3**k for k in range(11))
        assert 0.0 < far.tail_cb_bound < near.tail_cb_bound

    def test_haagerup_split_negative_degree(self, pair_model):
        from core.domain.errors import PreconditionError
        from core.services.quantization import haagerup_split
        with pytest.raises(PreconditionError):
            haagerup_split(pair_model, 0.5, np.eye(3), -1)
