# Tests de las suites de verificación
# Ejecutar con: pytest tests/test_verify.py -v
# Solo rápidos: pytest tests/test_verify.py -m "not slow"

import pytest


# =============================================================================
# TESTS DEL REGISTRO DE SUITES
# =============================================================================

@pytest.mark.unit
class TestRunSuite:
    """run_suite: tolerancias, semilla y métricas"""

    def test_registry(self):
        from core.services.verify import SUITES
        assert set(SUITES) == {
            "wick", "majf", "moments", "twopoint", "modular",
            "malleability", "transversality", "cas00", "quantization",
        }
        assert all(suite.tolerance > 0 for suite in SUITES.values())

    def test_unknown_suite(self):
        from core.domain.errors import ValidationError
        from core.services.verify import run_suite
        with pytest.raises(ValidationError) as exc:
            run_suite("bogus")
        assert exc.value.details["field"] == "suite"

    def test_default_tolerance(self):
        from core.services.verify import SUITES, run_suite
        report = run_suite("twopoint", seed=0)
        assert report.tolerance == SUITES["twopoint"].tolerance
        assert report.passed
        assert report.failures == []
        assert report.cases > 0

    def test_deterministic_by_seed(self):
        from core.services.verify import run_suite
        first = run_suite("twopoint", seed=3)
        second = run_suite("twopoint", seed=3)
        assert first.max_residual == second.max_residual

    def test_negative_tolerance_fails_every_case(self):
        from core.services.verify import run_suite
        report = run_suite("moments", tol=-1.0)
        assert not report.passed
        assert len(report.failures) == report.cases
        assert report.max_residual == max(f.residual for f in report.failures)

    def test_case_tolerance_is_stricter(self, monkeypatch):
        from core.services.verify import SUITES, run_suite
        from core.services.verify.suites import Suite, SuiteOutcome

        def run(seed):
            return SuiteOutcome([("holgado", 5e-11), ("identidad", 5e-11, 1e-12)])

        monkeypatch.setitem(SUITES, "mixed", Suite("mixed", run, 1e-10))
        report = run_suite("mixed", seed=0)
        assert not report.passed
        assert [f.case for f in report.failures] == ["identidad"]
        assert report.failures[0].tolerance == 1e-12
        assert report.tolerance == 1e-10

    def test_explicit_tol_overrides_case_tolerance(self, monkeypatch):
        from core.services.verify import SUITES, run_suite
        from core.services.verify.suites import Suite, SuiteOutcome
        monkeypatch.setitem(
            SUITES, "mixed", Suite("mixed", lambda seed: SuiteOutcome([("identidad", 5e-11, 1e-12)]), 1e-10)
        )
        assert run_suite("mixed", seed=0, tol=1e-10).passed

    @pytest.mark.slow
    def test_exact_identities_use_strict_tolerance(self):
        from core.services.verify.suites import EXACT_TOLERANCE, cas00_suite, modular_suite
        strict = [case for case in modular_suite(0).cases + cas00_suite(0).cases if len(case) == 3]
        names = [case[0] for case in strict]
        assert any("campo" in name for name in names)
        assert any("símbolo" in name for name in names)
        assert sum("identidad" in name for name in names) == 3
        assert all(case[2] == EXACT_TOLERANCE for case in strict)
        assert all(case[1] <= case[2] for case in strict)

    def test_records_metrics(self):
        from core.services.verify import run_suite
        from utils.metrics import metrics
        metrics.reset()
        run_suite("twopoint", seed=0)
        run_suite("moments", tol=-1.0)
        snapshot = metrics.get_metrics()
        assert snapshot["checks_total"] == {"twopoint": 1, "moments": 1}
        assert snapshot["checks_failed"] == {"moments": 1}
        assert snapshot["durations_ms"]["verify"]["count"] == 2


# =============================================================================
# TESTS DE LAS SUITES COMPLETAS
# =============================================================================

@pytest.mark.slow
class TestFullSuites:
    """Cada suite pasa con la semilla por defecto"""

    @pytest.mark.parametrize(
        "name",
        ["wick", "majf", "moments", "twopoint", "modular", "malleability", "cas00", "quantization"],
    )
    def test_suite_passes(self, name):
        from core.services.verify import run_suite
        report = run_suite(name, seed=0)
        assert report.passed, report.failures[:3]

    def test_transversality(self):
        from core.services.verify import run_suite
        report = run_suite("transversality", seed=0)
        assert report.passed
        assert report.cases >= 1000
