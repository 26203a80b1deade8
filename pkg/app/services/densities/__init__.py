"""
Density oracles package
"""
from app.core.base_density import SubsetDensity
from app.services.densities.dpp import DppDensity, dpp_eval
from app.services.densities.graphic import (
    ComplementInverseDensity,
    GraphicBasisDensity,
    complement_inverse_density,
    graphic_basis_density,
)
from app.services.densities.polynomial import hessian_at, positive_eigenvalue_count
from app.services.densities.table_density import (
    TableDensity,
    UniformMatroidDensity,
    uniform_matroid_density,
)

__all__ = [
    'SubsetDensity',
    'DppDensity',
    'dpp_eval',
    'ComplementInverseDensity',
    'GraphicBasisDensity',
    'complement_inverse_density',
    'graphic_basis_density',
    'hessian_at',
    'positive_eigenvalue_count',
    'TableDensity',
    'UniformMatroidDensity',
    'uniform_matroid_density',
]
