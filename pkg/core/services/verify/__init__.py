# Suites de verificación del subcomando verify
from core.services.verify.suites import SUITES, Suite, SuiteOutcome, run_suite

__all__ = ["SUITES", "Suite", "SuiteOutcome", "run_suite"]
