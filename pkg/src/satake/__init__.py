"""Exact combinatorics of half-integral spherical unitary parameters."""

from .rootdata import (
    ChamberPoint,
    DomainError,
    RootDatum,
    SimpleType,
    build_root_datum,
    coroot_level,
    dominant_representative,
    fold,
    is_hermitian,
    pairing,
)

__version__ = "0.1.0"

__all__ = [
    "ChamberPoint",
    "DomainError",
    "RootDatum",
    "SimpleType",
    "build_root_datum",
    "coroot_level",
    "dominant_representative",
    "fold",
    "is_hermitian",
    "pairing",
]
