"""Exact computational algebra for the braids-and-ties algebra."""

from .laurent import LaurentPoly, PrimeField, QQ, Rationals
from .algebra import (Element, LAURENT, SpecializedRing, central_idempotent,
                      gen_e, gen_g, gen_g_inv, orthogonal_idempotent)
from .cellposet import CellShape, CellTableau, cell_shapes, \
    standard_cell_tableaux
from .cellular import (cell_basis, cell_element, m_element, n_element,
                       ptl_generator, steinberg)
from .annihilator import (AnnihilatorReport, bruteforce_annihilator_dim,
                          etl_dim, predicted_annihilator, ptl_dim,
                          steinberg_ideal_dim, verify_predicted_basis)

__all__ = [
    "LaurentPoly", "PrimeField", "QQ", "Rationals",
    "Element", "LAURENT", "SpecializedRing", "central_idempotent",
    "gen_e", "gen_g", "gen_g_inv", "orthogonal_idempotent",
    "CellShape", "CellTableau", "cell_shapes", "standard_cell_tableaux",
    "cell_basis", "cell_element", "m_element", "n_element",
    "ptl_generator", "steinberg",
    "AnnihilatorReport", "bruteforce_annihilator_dim", "etl_dim",
    "predicted_annihilator", "ptl_dim", "steinberg_ideal_dim",
    "verify_predicted_basis",
]

__version__ = "0.1.0"
