# Core Domain - Entidades del laboratorio de Fock

from core.domain.fock import FockSpace, FockVector, TensorWord
from core.domain.model import EigenPair, RepSpec, RepModel, Symbol
from core.domain.radial import (
    RadialSymbol,
    HankelData,
    PhiSpec,
    FinitePhi,
    GeometricPhi,
    CutoffProjectionPhi,
    GeneralPhi,
)
from core.domain.contraction import ContractionSpec
from core.domain.errors import (
    LabError,
    ValidationError,
    PreconditionError,
    DegreeError,
    CapacityError,
    IncompatibleSpaceError,
    InconsistentTailError,
    CompatibilityError,
    ConvergenceError,
    SearchCapError,
)
from core.domain.reports import (
    ErrorDetail,
    NormReport,
    ProjectionNormReport,
    PdNormRow,
    CbNormReport,
    MajfReport,
    HaagerupNetReport,
    ToeplitzWitnessReport,
    ResidualReport,
    SummandNorm,
    SnIdentityReport,
    MalleabilityReport,
    CmapReport,
    HaagerupSplitReport,
    MomentRow,
    CaseFailure,
    SuiteReport,
)

__all__ = [
    # Entidades
    "FockSpace",
    "FockVector",
    "TensorWord",
    "EigenPair",
    "RepSpec",
    "RepModel",
    "Symbol",
    "RadialSymbol",
    "HankelData",
    "PhiSpec",
    "FinitePhi",
    "GeometricPhi",
    "CutoffProjectionPhi",
    "GeneralPhi",
    "ContractionSpec",
    # Errores
    "LabError",
    "ValidationError",
    "PreconditionError",
    "DegreeError",
    "CapacityError",
    "IncompatibleSpaceError",
    "InconsistentTailError",
    "CompatibilityError",
    "ConvergenceError",
    "SearchCapError",
    # Reportes
    "ErrorDetail",
    "NormReport",
    "ProjectionNormReport",
    "PdNormRow",
    "CbNormReport",
    "MajfReport",
    "HaagerupNetReport",
    "ToeplitzWitnessReport",
    "ResidualReport",
    "SummandNorm",
    "SnIdentityReport",
    "MalleabilityReport",
    "CmapReport",
    "HaagerupSplitReport",
    "MomentRow",
    "CaseFailure",
    "SuiteReport",
]
