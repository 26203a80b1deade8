"""
Document repositories
"""
from app.repositories.density_repository import DensityRepository
from app.repositories.graph_repository import GraphRepository

__all__ = [
    'DensityRepository',
    'GraphRepository',
]
