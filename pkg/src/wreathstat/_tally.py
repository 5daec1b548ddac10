"""Pick the compiled tally kernel when it was built, else the pure-Python one."""
try:
    from ._ctally import tally
    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on the build
    from ._pytally import tally
    BACKEND = "python"

__all__ = ["tally", "BACKEND"]
