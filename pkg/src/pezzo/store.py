"""Persistent, queryable store of curve-count invariants.

Keys are (kind, space, class, pairs) with kind GW or W.  GW values and
totally-real (pairs = 0) Welschinger values on the standard toric surfaces
are computed on demand; every other Welschinger value must come from CSV
ingestion.  Values are cached in memory and, when a cache directory is
configured, in one append-only text file per space.

CSV grammar: a header line ``space,c1,...,cK,l,value`` followed by data rows
with exactly rank+3 comma-separated fields; ``#`` lines are comments; UTF-8.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from typing import Optional

from . import floor, gw
from .errors import (
    CacheError,
    CsvParseError,
    DataUnavailableError,
    DegeneratePolygonError,
    DomainError,
)
from .lattice import FAMILIES, SURFACES, constraint_count

CACHE_ENV = "PEZZO_CACHE_DIR"

# toric surfaces whose totally real counts the diagram backend serves
_DIAGRAM_SPACES = ("p2", "q", "qx1", "qx2")

# space token -> (rank, role); roles: surface, twisted-surface, family
_SPACE_INFO = {
    "p2": (1, "surface"), "p2x1": (2, "surface"), "p2x2": (3, "surface"),
    "p2x3": (4, "surface"), "q": (2, "surface"), "qx1": (3, "surface"),
    "qx2": (4, "surface"),
    "qx2t": (3, "twisted-surface"),
    "deg8": (1, "family"), "deg7": (2, "family"),
    "deg6": (3, "family"), "deg6t": (2, "family"),
}

# emission tokens for complex-count tables; ingest maps them to GW keys
_GW_ALIAS = {"deg8-gw": "deg8", "deg7-gw": "deg7", "deg6-gw": "deg6"}


def space_rank(space: str) -> int:
    if space in _GW_ALIAS:
        space = _GW_ALIAS[space]
    try:
        return _SPACE_INFO[space][0]
    except KeyError:
        raise DomainError(f"unknown space token {space!r}") from None


@dataclass(frozen=True)
class InvariantKey:
    kind: str        # "GW" or "W"
    space: str
    cls: tuple
    pairs: int = 0

    def __post_init__(self):
        if self.kind not in ("GW", "W"):
            raise DomainError(f"bad kind {self.kind!r}")
        if self.kind == "GW" and self.pairs != 0:
            raise DomainError("GW keys carry pairs = 0")
        if self.pairs < 0:
            raise DomainError("pairs must be nonnegative")
        rank = space_rank(self.space)
        if len(self.cls) != rank:
            raise DomainError(
                f"space {self.space}: class {self.cls} has length {len(self.cls)}, want {rank}"
            )

    def canonical(self) -> "InvariantKey":
        space, cls = self.space, tuple(int(x) for x in self.cls)
        role = _SPACE_INFO[space][1]
        if role == "surface":
            lat = SURFACES[space]
            if self.kind == "GW":
                cls = gw.canonical_class(lat, cls)
            elif lat.vanishing_cycle is not None:
                from .lattice import monodromy
                cls = min(cls, monodromy(lat, cls))
        elif role == "twisted-surface":
            a, alpha, beta = cls
            cls = min(cls, (a, beta, alpha))
        elif space == "deg6":
            cls = tuple(sorted(cls, reverse=True))
        return InvariantKey(self.kind, space, cls, self.pairs)

    def __str__(self):
        cls = ",".join(map(str, self.cls))
        return f"({self.kind} {self.space} ({cls}) l={self.pairs})"


def _gw_of(space: str, cls: tuple) -> int:
    """Complex count behind a key, used for computation and validation."""
    role = _SPACE_INFO[space][1]
    if role == "surface":
        return gw.gw_surface(space, cls)
    if role == "twisted-surface":
        a, alpha, beta = cls
        return gw.gw_surface("qx2", (a, a, alpha, beta))
    from . import combine  # deferred: combine imports this module
    if space == "deg6t":
        a, c = cls
        return combine.gw_threefold(FAMILIES["deg6"], (a, a, c))
    return combine.gw_threefold(FAMILIES[space], cls)


def _w_l0_surface(space: str, cls: tuple) -> int:
    """Totally real count on a standard toric surface, via floor diagrams.

    Classes without a Newton polygon are either invisible (zero complex
    count) or rigid smooth curves through no points, which count +1.
    """
    try:
        pc = floor.polygon_of(space, cls)
    except DegeneratePolygonError:
        total = gw.gw_surface(space, cls)
        if total == 0:
            return 0
        if total == 1 and constraint_count(SURFACES[space], cls) == 0:
            return 1
        raise
    return floor.fd_count_real_l0(pc)


@dataclass
class IngestReport:
    inserted: int = 0
    rejected: list = field(default_factory=list)   # (lineno, reason)

    def __int__(self):
        return self.inserted


class Store:
    """Content-addressed invariant map with optional on-disk persistence."""

    def __init__(self, cache_dir: Optional[str] = None, load_fixtures: bool = True):
        if cache_dir is None:
            cache_dir = os.environ.get(CACHE_ENV) or None
        self.cache_dir = cache_dir
        self._data: dict = {}
        self._lock = threading.RLock()
        if self.cache_dir:
            os.makedirs(self.cache_dir, exist_ok=True)
            self._load_cache()
        if load_fixtures:
            self._load_bundled_fixtures()

    # -- persistence ----------------------------------------------------------

    def _cache_path(self, space: str) -> str:
        return os.path.join(self.cache_dir, f"{space}.store")

    def _load_cache(self):
        for name in sorted(os.listdir(self.cache_dir)):
            if not name.endswith(".store"):
                continue
            space = name[: -len(".store")]
            with open(os.path.join(self.cache_dir, name), encoding="utf-8") as fh:
                for raw in fh:
                    line = raw.strip()
                    if not line or line.startswith("#"):
                        continue
                    parts = line.split(",")
                    kind = parts[0]
                    cls = tuple(int(x) for x in parts[1:-2])
                    key = InvariantKey(kind, space, cls, int(parts[-2])).canonical()
                    value = int(parts[-1])
                    old = self._data.get(key)
                    if old is not None and old != value:
                        raise CacheError(f"{key}: cached {old} vs {value}")
                    self._data[key] = value

    def _persist(self, key: InvariantKey, value: int):
        if not self.cache_dir:
            return
        cls = ",".join(map(str, key.cls))
        with open(self._cache_path(key.space), "a", encoding="utf-8") as fh:
            fh.write(f"{key.kind},{cls},{key.pairs},{value}\n")

    def _load_bundled_fixtures(self):
        data_dir = os.path.join(os.path.dirname(__file__), "data")
        for name, space in (
            ("welschinger_plane.csv", "p2"),
            ("welschinger_blown_quadric.csv", "qx1"),
        ):
            path = os.path.join(data_dir, name)
            if os.path.exists(path):
                self.ingest_csv(path, space, persist=False)

    # -- core map -------------------------------------------------------------

    def insert(self, key: InvariantKey, value: int, persist: bool = True) -> bool:
        """Insert a canonicalized entry; False when it conflicts."""
        key = key.canonical()
        value = int(value)
        with self._lock:
            old = self._data.get(key)
            if old is not None:
                return old == value
            self._data[key] = value
            if persist:
                self._persist(key, value)
            return True

    def lookup(self, key: InvariantKey):
        return self._data.get(key.canonical())

    def __len__(self):
        return len(self._data)

    def spaces(self) -> dict:
        out: dict = {}
        for key in self._data:
            out[key.space] = out.get(key.space, 0) + 1
        return out

    def get_or_compute(self, key: InvariantKey) -> int:
        key = key.canonical()
        with self._lock:
            known = self._data.get(key)
            if known is not None:
                return known
            value = self._compute(key)
            self._data[key] = value
            self._persist(key, value)
            return value

    def _compute(self, key: InvariantKey) -> int:
        if key.kind == "GW":
            return _gw_of(key.space, key.cls)
        role = _SPACE_INFO[key.space][1]
        if role == "family":
            from . import combine
            query = combine.WelschingerQuery(key.space, key.cls, key.pairs)
            return combine.w_threefold(query, store=self)
        # surface Welschinger: a vanishing complex count forces zero
        if _gw_of(key.space, key.cls) == 0:
            return 0
        if key.pairs == 0 and key.space in _DIAGRAM_SPACES:
            return _w_l0_surface(key.space, key.cls)
        raise DataUnavailableError([key])

    # -- ingestion --------------------------------------------------------------

    def ingest_csv(self, path, space_id: str, persist: bool = True) -> IngestReport:
        """Load a CSV table of Welschinger (or emitted complex) values.

        Parse problems raise CsvParseError with the offending line number;
        rows failing validation are collected in the report instead.
        """
        kind = "GW" if space_id in _GW_ALIAS else "W"
        space = _GW_ALIAS.get(space_id, space_id)
        rank = space_rank(space)
        report = IngestReport()
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        header = None
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if header is None:
                expect = ["space"] + [f"c{i}" for i in range(1, rank + 1)] + ["l", "value"]
                if parts != expect:
                    raise CsvParseError(lineno, f"bad header {line!r}, want {','.join(expect)}")
                header = parts
                continue
            if len(parts) != rank + 3:
                raise CsvParseError(lineno, f"expected {rank + 3} fields, got {len(parts)}")
            row_space = parts[0]
            try:
                cls = tuple(int(x) for x in parts[1:-2])
                pairs = int(parts[-2])
                value = int(parts[-1])
            except ValueError as exc:
                raise CsvParseError(lineno, str(exc)) from None
            if row_space != space_id:
                report.rejected.append((lineno, f"space {row_space!r} != {space_id!r}"))
                continue
            if pairs < 0:
                report.rejected.append((lineno, f"negative pair count {pairs}"))
                continue
            try:
                key = InvariantKey(kind, space, cls, 0 if kind == "GW" else pairs)
            except DomainError as exc:
                report.rejected.append((lineno, str(exc)))
                continue
            reason = self._validate_row(key, value, pairs)
            if reason:
                report.rejected.append((lineno, reason))
                continue
            if not self.insert(key, value, persist=persist):
                report.rejected.append(
                    (lineno, f"conflicts with stored value {self.lookup(key)}")
                )
                continue
            report.inserted += 1
        if header is None:
            raise CsvParseError(1, "missing header line")
        return report

    def _validate_row(self, key: InvariantKey, value: int, pairs: int):
        try:
            total = _gw_of(key.space, key.cls)
        except (DomainError, DataUnavailableError):
            return None  # complex side not computable: accept as-is
        if key.kind == "GW":
            if pairs != 0:
                return "complex-count rows must have l = 0"
            if value != total:
                return f"complex count is {total}, row says {value}"
            return None
        if abs(value) > total:
            return f"|{value}| exceeds complex count {total}"
        if (value - total) % 2:
            return f"parity of {value} conflicts with complex count {total}"
        return None

    # -- cache control ----------------------------------------------------------

    def clear_cache(self) -> int:
        """Delete the persistent files; in-memory values are kept."""
        removed = 0
        if self.cache_dir and os.path.isdir(self.cache_dir):
            for name in sorted(os.listdir(self.cache_dir)):
                if name.endswith(".store"):
                    os.remove(os.path.join(self.cache_dir, name))
                    removed += 1
        return removed


_DEFAULT: Optional[Store] = None


def default_store() -> Store:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Store()
    return _DEFAULT
