"""
Population initializers: Bit-string Uniform and Uniform Covering.
"""

from featsel.core.initialization.initializers import (
    InitMethod,
    InitSpec,
    bitstring_uniform,
    genuine_init,
    initialize,
)

__all__ = ["InitMethod", "InitSpec", "bitstring_uniform", "genuine_init", "initialize"]
