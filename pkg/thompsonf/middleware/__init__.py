from .logging import add_logging_middleware
from .exception import add_exception_middleware

__all__ = [
    "add_logging_middleware",
    "add_exception_middleware",
]
