"""
Dynamic forest (link-cut trees) package
"""
from app.services.linkcut.dynamic_forest import DynamicForest

__all__ = ['DynamicForest']
