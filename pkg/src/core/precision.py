"""
Working-precision context for ball arithmetic and root isolation.
Uses contextvars for per-computation precision and a process lock for mpmath's
global contexts.
"""

import threading
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, Optional

from mpmath import iv, mp

# Context variable for the active precision
_precision_context: ContextVar[Optional["PrecisionContext"]] = ContextVar(
    "precision_context", default=None
)

# mp.prec and iv.prec are process-wide
_mpmath_lock = threading.RLock()


@dataclass(frozen=True)
class PrecisionContext:
    """
    Holds the working precision, in bits, of the current computation.

    Numeric caches (root tables, Archimedean places) are keyed by this value.
    """

    bits: int

    @classmethod
    def get_current(cls) -> "PrecisionContext":
        """
        Get the current precision context.

        Raises:
            RuntimeError: If no precision context is set.
        """
        ctx = _precision_context.get()
        if ctx is None:
            raise RuntimeError("No precision context set. Wrap the call in working_precision().")
        return ctx

    @classmethod
    def get_current_or_none(cls) -> Optional["PrecisionContext"]:
        """Get the current precision context or None if not set."""
        return _precision_context.get()

    @classmethod
    def set(cls, bits: int) -> "PrecisionContext":
        """
        Set the precision for the current context.

        Args:
            bits: Working precision in bits

        Returns:
            The created PrecisionContext
        """
        if bits < 16:
            raise ValueError(f"Working precision must be at least 16 bits, got {bits}")
        ctx = cls(bits=bits)
        _precision_context.set(ctx)
        return ctx

    @classmethod
    def clear(cls) -> None:
        """Clear the current precision context."""
        _precision_context.set(None)


def current_bits(default: int = 64) -> int:
    """Active working precision, or `default` outside any working_precision block."""
    ctx = _precision_context.get()
    return ctx.bits if ctx is not None else default


_precision_cap: ContextVar[Optional[int]] = ContextVar("precision_cap", default=None)


def current_cap_override() -> Optional[int]:
    """Precision cap set by an enclosing precision_cap() block, if any."""
    return _precision_cap.get()


@contextmanager
def precision_cap(bits: Optional[int]) -> Iterator[None]:
    """Override the refinement cap (e.g. from a CLI flag) for the enclosed block."""
    token = _precision_cap.set(bits)
    try:
        yield
    finally:
        _precision_cap.reset(token)


@contextmanager
def working_precision(bits: int) -> Iterator[PrecisionContext]:
    """
    Run a block at `bits` of working precision.

    Sets the context variable and mpmath's `mp.prec` / `iv.prec` for the
    dynamic extent of the block, restoring all three on exit.
    """
    with _mpmath_lock:
        token = _precision_context.set(PrecisionContext(bits=bits))
        saved_mp, saved_iv = mp.prec, iv.prec
        mp.prec = bits
        iv.prec = bits
        try:
            yield _precision_context.get()
        finally:
            mp.prec = saved_mp
            iv.prec = saved_iv
            _precision_context.reset(token)
