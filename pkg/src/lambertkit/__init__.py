"""Exact Lambert series, Dirichlet convolution algebra and an identity verification harness."""
from .arith import ArithmeticFunction, builtin
from .fps import DomainError, LogLinear, TruncatedSeries

__version__ = "0.1.0"

__all__ = ["ArithmeticFunction", "builtin", "DomainError", "LogLinear", "TruncatedSeries", "__version__"]
