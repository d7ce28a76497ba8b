"""Exact engine for rational-curve counts on del Pezzo surfaces of degree at
least six and the threefold families fibered by them.

Complex counts come from two independent backends (a lattice recursion and
tropical floor diagrams); real signed counts combine surface inputs with the
per-family sign calculus.  Everything is exact integer arithmetic.
"""

from .combine import (
    WelschingerQuery,
    gw_threefold,
    gw_vanishes_a_priori,
    positivity_report,
    w_threefold,
    w_vanishes_a_priori,
)
from .errors import (
    CacheError,
    CsvParseError,
    DataUnavailableError,
    DegeneratePolygonError,
    DomainError,
    EvenPairingError,
    ParityError,
    PezzoError,
    RankMismatchError,
    UndefinedSignError,
    UnsupportedLatticeError,
    WQueryError,
)
from .floor import (
    FloorDiagram,
    PolygonClass,
    enumerate_diagrams,
    fd_count_complex,
    fd_count_real_l0,
    polygon_of,
)
from .gw import gw_blowup_p2, gw_p2, gw_surface
from .lattice import (
    FAMILIES,
    SURFACES,
    SurfaceLattice,
    ThreefoldFamily,
    constraint_count,
    fiber,
    genus,
    monodromy,
    pair,
    push_forward,
    quadric_to_plane,
    singular_fiber_count,
)
from .signs import (
    SIGN_DATA,
    FamilySignData,
    QuasiQuadraticEnhancement,
    epsilon,
    qqe_eval,
    rho,
    sign_exponent,
)
from .store import IngestReport, InvariantKey, Store, default_store

__version__ = "1.0.0"

__all__ = [
    "FAMILIES", "SURFACES", "SurfaceLattice", "ThreefoldFamily",
    "pair", "constraint_count", "genus", "monodromy", "push_forward",
    "fiber", "quadric_to_plane", "singular_fiber_count",
    "gw_p2", "gw_blowup_p2", "gw_surface",
    "PolygonClass", "FloorDiagram", "polygon_of", "enumerate_diagrams",
    "fd_count_complex", "fd_count_real_l0",
    "QuasiQuadraticEnhancement", "FamilySignData", "SIGN_DATA",
    "epsilon", "qqe_eval", "rho", "sign_exponent",
    "InvariantKey", "Store", "IngestReport", "default_store",
    "WelschingerQuery", "gw_threefold", "w_threefold",
    "gw_vanishes_a_priori", "w_vanishes_a_priori", "positivity_report",
    "PezzoError", "RankMismatchError", "ParityError", "UnsupportedLatticeError",
    "DomainError", "DegeneratePolygonError", "UndefinedSignError",
    "EvenPairingError", "WQueryError", "DataUnavailableError", "CsvParseError",
    "CacheError",
]
