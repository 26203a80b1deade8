"""
Down-up walk package: generic walk, mixing schedule and exact analysis
"""
from app.services.walk.down_up_walk import down_up_step, mixing_steps, run_chain, tau_survival
from app.services.walk.exact_analysis import (
    TransitionKernel,
    analyze_walk_exact,
    exact_mixing_time,
    kl_divergence,
    point_mass,
    push_forward,
    random_distribution,
    reversibility_error,
    spectral_gap,
    stationarity_error,
    stationary_table,
    transition_matrix,
    tv_distance,
)

__all__ = [
    'down_up_step',
    'mixing_steps',
    'run_chain',
    'tau_survival',
    'TransitionKernel',
    'analyze_walk_exact',
    'exact_mixing_time',
    'kl_divergence',
    'point_mass',
    'push_forward',
    'random_distribution',
    'reversibility_error',
    'spectral_gap',
    'stationarity_error',
    'stationary_table',
    'transition_matrix',
    'tv_distance',
]
