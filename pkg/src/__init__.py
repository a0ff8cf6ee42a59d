"""HeightForge - exact heights, Mahler measures and quotient norms over number fields."""

__version__ = "0.1.0"
