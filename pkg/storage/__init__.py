# Storage layer
from .db import connect, SCHEMA_SQL
from .repository import SweepRepository

__all__ = ["connect", "SCHEMA_SQL", "SweepRepository"]
