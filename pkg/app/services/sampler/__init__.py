"""
Spanning-tree sampler package
"""
from app.services.sampler.sampler_executor import SamplerExecutor, sample_many
from app.services.sampler.tree_sampler import (
    TreeSamplerState,
    chain_rng,
    check_state,
    cographic_step,
    graphic_step,
    init_state,
    sample_chain,
    sample_tree,
    schedule_for,
    warm_up,
)
from app.services.sampler.verification import verify_sampler

__all__ = [
    'SamplerExecutor',
    'sample_many',
    'TreeSamplerState',
    'chain_rng',
    'check_state',
    'cographic_step',
    'graphic_step',
    'init_state',
    'sample_chain',
    'sample_tree',
    'schedule_for',
    'verify_sampler',
    'warm_up',
]
