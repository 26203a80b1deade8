"""
Approximate-exchange and log-concavity checks package
"""
from app.services.exchange.exchange_checker import (
    dpp_exchange_bound_check,
    exchange_alpha,
    logconcavity_necessary_check,
    quadratic_exchange_check,
)

__all__ = [
    'dpp_exchange_bound_check',
    'exchange_alpha',
    'logconcavity_necessary_check',
    'quadratic_exchange_check',
]
