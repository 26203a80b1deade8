"""
downup - spanning-tree sampling with the down-up walk on the cographic matroid
"""

__version__ = "0.1.0"
