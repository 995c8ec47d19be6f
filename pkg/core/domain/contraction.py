# Contracciones T: H -> H para la segunda cuantización

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class ContractionSpec:
    """
    Contracción certificada.

    norm_bound es la norma de operador calculada por SVD; i_defect = ‖ITI - T‖
    respecto del modelo con el que se construyó (None si no se evaluó).
    bands lista los bloques espectrales seleccionados por band_approximant.
    """

    matrix: np.ndarray
    norm_bound: float
    i_defect: float = None
    bands: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        data = np.array(self.matrix, dtype=complex)
        data.flags.writeable = False
        object.__setattr__(self, "matrix", data)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def rank(self) -> int:
        return int(np.linalg.matrix_rank(self.matrix)) if self.matrix.size else 0
