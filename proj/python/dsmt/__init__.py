"""Hyper-powerset generation, belief matrices and combination rules."""

from ._core import (
    BeliefMatrix,
    Error,
    FrameModel,
    FullContradiction,
    InvalidArgument,
    Lattice,
    NotTriangular,
    belief,
    bm_recursive_dst,
    combine,
    generate_closure_oracle,
    generate_isotone,
    generate_lattice,
    generate_powerset,
    plausibility,
)

__all__ = [
    "BeliefMatrix",
    "Error",
    "FrameModel",
    "FullContradiction",
    "InvalidArgument",
    "Lattice",
    "NotTriangular",
    "belief",
    "bm_recursive_dst",
    "combine",
    "generate_closure_oracle",
    "generate_isotone",
    "generate_lattice",
    "generate_powerset",
    "plausibility",
]
