"""Switch between optimized and definitional ("oracle") evaluation paths."""
from __future__ import annotations

import contextlib
from contextvars import ContextVar

_ORACLE: ContextVar[bool] = ContextVar("adfsem_oracle", default=False)


def oracle_enabled() -> bool:
    return _ORACLE.get()


@contextlib.contextmanager
def oracle_paths(enabled: bool = True):
    """Within the block, decisiveness, derivability and gamma use their brute-force definitions."""
    token = _ORACLE.set(enabled)
    try:
        yield
    finally:
        _ORACLE.reset(token)
