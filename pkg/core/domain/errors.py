# Excepciones personalizadas para Fock-Lab


class LabError(Exception):
    """Excepción base para Fock-Lab"""

    # Código de salida del CLI: 1 = chequeo matemático fallido, 2 = entrada inválida
    exit_code: int = 2

    def __init__(self, message: str, code: str, details: dict = None):
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "details": self.details}


class ValidationError(LabError):
    """Errores de validación de entrada (JSON, flags)"""

    def __init__(self, message: str, field: str = None):
        super().__init__(
            message=message,
            code="VALIDATION_ERROR",
            details={"field": field} if field else {},
        )


class PreconditionError(LabError):
    """Precondición matemática violada (ortonormalidad, λ ≤ 1, headroom...)"""

    def __init__(self, message: str, check: str = None, **details):
        super().__init__(
            message=message,
            code="PRECONDITION_ERROR",
            details={"check": check, **details},
        )


class DegreeError(PreconditionError):
    """Grado tensorial por encima del truncamiento"""

    def __init__(self, degree: int, max_degree: int, required: int = None):
        message = f"Grado {degree} excede el truncamiento L={max_degree}."
        if required is not None:
            message = f"Se requiere L >= {required} (actual L={max_degree})."
        super().__init__(
            message=message,
            check="degree",
            degree=degree,
            max_degree=max_degree,
            required=required,
        )


class CapacityError(LabError):
    """Un espacio truncado o una matriz de Hankel excede el presupuesto de memoria"""

    def __init__(self, total_dim: int, budget: int, quantity: str = "total_dim"):
        super().__init__(
            message=f"{quantity}={total_dim} excede el presupuesto configurado ({budget}).",
            code="CAPACITY_ERROR",
            details={quantity: total_dim, "budget": budget},
        )


class IncompatibleSpaceError(LabError):
    """Operadores o vectores sobre espacios distintos"""

    def __init__(self, message: str = "Espacios de Fock incompatibles."):
        super().__init__(message=message, code="INCOMPATIBLE_SPACE")


class InconsistentTailError(LabError):
    """ψ no se anula al final del rango declarado"""

    def __init__(self, residual: float):
        super().__init__(
            message=f"ψ no se anula al final del rango (|ψ(N)| = {residual:.3e}).",
            code="INCONSISTENT_TAIL",
            details={"residual": residual},
        )


class CompatibilityError(LabError):
    """Contracción no compatible con I (ITI ≠ T) o con norma > 1"""

    def __init__(self, message: str, defect: float = None, norm: float = None):
        super().__init__(
            message=message,
            code="COMPATIBILITY_ERROR",
            details={"i_defect": defect, "norm": norm},
        )


class ConvergenceError(LabError):
    """La iteración de potencia no convergió"""

    exit_code = 1

    def __init__(self, iterations: int, drift: float):
        super().__init__(
            message=f"Iteración de potencia sin convergencia tras {iterations} iteraciones.",
            code="CONVERGENCE_ERROR",
            details={"iterations": iterations, "drift": drift},
        )


class SearchCapError(LabError):
    """La búsqueda de d en la red de Haagerup superó el tope"""

    exit_code = 1

    def __init__(self, n: int, cap: int, best: float):
        super().__init__(
            message=f"Sin d <= {cap} con certificado <= 1 + 1/{n} (mejor: {best:.6f}).",
            code="SEARCH_CAP_ERROR",
            details={"n": n, "cap": cap, "best": best},
        )
