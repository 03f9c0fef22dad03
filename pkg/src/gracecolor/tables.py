"""Embedded reference values and the persistent cache of proven results.

The reference table lists published graceful chromatic numbers of complete
graphs on 2..32 vertices together with witness color sets.  The witnesses
are embedded verbatim as fixture data so that transcription slips are caught
by the internal-consistency test instead of being trusted silently.

The value cache persists proven results between runs.  File format, bit
exact: UTF-8 with LF endings, one record per line,

    <kind> <index> <value> <witness>

where kind is "L" (largest 3-AP-free subset of [1..index] has `value`
elements) or "A" (an index-element 3-AP-free set fits in [1..value] and no
smaller span); witness is comma-separated ascending integers with no spaces.
Lines are sorted by (kind, index); '#' starts a comment line.  Only proven
values are ever written.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from typing import Iterable

from .ap3 import Ap3Engine, is_ap3_free
from .budget import BudgetMeter, SolveBudget

SOURCE_PUBLISHED = "published"
SOURCE_COMPUTED = "computed"

KIND_LONGEST = "L"
KIND_SPAN = "A"

# Reference results: n -> (chi_g of the complete graph on n vertices, witness).
CHI_G_COMPLETE_REFERENCE: dict[int, tuple[int, tuple[int, ...]]] = {
    2: (2, (1, 2)),
    3: (4, (1, 2, 4)),
    4: (5, (1, 2, 4, 5)),
    5: (9, (1, 2, 4, 8, 9)),
    6: (11, (1, 2, 4, 5, 10, 11)),
    7: (13, (1, 2, 4, 5, 10, 11, 13)),
    8: (14, (1, 2, 4, 5, 10, 11, 13, 14)),
    9: (20, (1, 2, 6, 7, 9, 14, 15, 18, 20)),
    10: (24, (1, 2, 5, 7, 11, 16, 18, 19, 23, 24)),
    11: (26, (1, 2, 5, 7, 11, 16, 18, 19, 23, 24, 26)),
    12: (30, (1, 3, 4, 8, 9, 11, 20, 22, 23, 27, 28, 30)),
    13: (32, (1, 2, 4, 8, 9, 11, 19, 22, 23, 26, 28, 31, 32)),
    14: (36, (1, 2, 4, 8, 9, 13, 21, 23, 26, 27, 30, 32, 35, 36)),
    15: (40, (1, 2, 4, 5, 10, 11, 13, 14, 28, 29, 31, 32, 37, 38, 40)),
    16: (41, (1, 2, 4, 5, 10, 11, 13, 14, 28, 29, 31, 32, 37, 38, 40, 41)),
    17: (51, (1, 2, 4, 5, 10, 13, 14, 17, 31, 35, 37, 38, 40, 46, 47, 50, 51)),
    18: (54, (1, 2, 5, 6, 12, 14, 15, 17, 21, 31, 38, 39, 42, 43, 49, 51, 52, 54)),
    19: (58, (1, 2, 5, 6, 12, 14, 15, 17, 21, 31, 38, 39, 42, 43, 49, 51, 52, 54, 58)),
    20: (63, (1, 2, 5, 7, 11, 16, 18, 19, 24, 26, 38, 39, 42, 44, 48, 53, 55, 56, 61,
              63)),
    21: (71, (1, 2, 5, 7, 10, 17, 20, 22, 26, 31, 41, 46, 48, 49, 53, 54, 63, 64, 68,
              69, 71)),
    22: (74, (1, 2, 7, 9, 10, 14, 20, 22, 23, 25, 29, 46, 50, 52, 53, 55, 61, 65, 66,
              68, 73, 74)),
    23: (82, (1, 2, 4, 8, 9, 11, 19, 22, 23, 26, 28, 31, 49, 57, 59, 62, 63, 66, 68,
              71, 78, 81, 82)),
    24: (84, (1, 3, 4, 8, 9, 16, 18, 21, 22, 25, 30, 37, 48, 55, 60, 63, 64, 67, 69,
              76, 77, 81, 82, 84)),
    25: (92, (1, 2, 6, 8, 9, 13, 19, 21, 22, 27, 28, 39, 58, 62, 64, 67, 68, 71, 73,
              81, 83, 86, 87, 90, 92)),
    26: (95, (1, 2, 4, 5, 10, 11, 22, 23, 25, 26, 31, 32, 55, 56, 64, 65, 67, 68, 76,
              77, 82, 83, 91, 92, 94, 95)),
    27: (100, (1, 3, 6, 7, 10, 12, 20, 22, 25, 26, 29, 31, 35, 62, 66, 68, 71, 72, 75,
               77, 85, 87, 90, 91, 94, 96, 100)),
    28: (104, (1, 5, 7, 10, 11, 14, 16, 24, 26, 29, 30, 33, 35, 39, 66, 70, 72, 75, 76,
               79, 81, 89, 91, 94, 95, 98, 100, 104)),
    29: (111, (1, 2, 5, 6, 13, 15, 19, 26, 27, 30, 31, 38, 42, 44, 66, 68, 72, 77, 80,
               81, 84, 89, 93, 95, 99, 104, 107, 108, 111)),
    30: (114, (1, 2, 4, 9, 12, 13, 18, 19, 28, 30, 31, 33, 40, 45, 46, 69, 70, 75, 82,
               84, 85, 87, 96, 97, 102, 103, 106, 111, 113, 114)),
    31: (121, (1, 2, 4, 5, 10, 11, 13, 14, 28, 29, 31, 32, 37, 38, 40, 41, 82, 83, 85,
               86, 91, 92, 94, 95, 109, 110, 112, 113, 118, 119, 121)),
    32: (122, (1, 2, 4, 5, 10, 11, 13, 14, 28, 29, 31, 32, 37, 38, 40, 41, 82, 83, 85,
               86, 91, 92, 94, 95, 109, 110, 112, 113, 118, 119, 121, 122)),
}

# Published largest-subset sizes kept for the stretch check; not hard-coded
# into any search path, only compared against computed results.
LONGEST_REFERENCE: dict[int, int] = {122: 32}


def known_chi_g_complete(n: int) -> int | None:
    """Embedded reference value for the complete graph on n vertices, if any."""
    entry = CHI_G_COMPLETE_REFERENCE.get(n)
    return entry[0] if entry else None


class CacheFormatError(ValueError):
    """Malformed cache file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class KnownValue:
    kind: str
    index: int
    value: int
    witness: tuple[int, ...]
    source: str = SOURCE_COMPUTED


def _validate(entry: KnownValue) -> None:
    if entry.kind not in (KIND_LONGEST, KIND_SPAN):
        raise ValueError(f"unknown kind {entry.kind!r}")
    if entry.index < 1 or entry.value < 1:
        raise ValueError("index and value must be positive")
    w = entry.witness
    if not w:
        raise ValueError("witness required")
    if any(b <= a for a, b in zip(w, w[1:])):
        raise ValueError("witness must be strictly increasing")
    if not is_ap3_free(w):
        raise ValueError("witness contains a 3-term progression")
    if entry.kind == KIND_LONGEST:
        if len(w) != entry.value:
            raise ValueError(f"witness size {len(w)} != value {entry.value}")
        if w[0] < 1 or w[-1] > entry.index:
            raise ValueError(f"witness not within [1..{entry.index}]")
    else:
        if len(w) != entry.index:
            raise ValueError(f"witness size {len(w)} != index {entry.index}")
        if w[0] != 1 or w[-1] != entry.value:
            raise ValueError(f"witness must span [1..{entry.value}] exactly")


class ValueCache:
    """In-memory map of proven values, loadable from and storable to disk."""

    def __init__(self, entries: Iterable[KnownValue] = ()):
        self._entries: dict[tuple[str, int], KnownValue] = {}
        for entry in entries:
            self.put(entry)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ValueCache):
            return NotImplemented
        return self._entries == other._entries

    def get(self, kind: str, index: int) -> KnownValue | None:
        return self._entries.get((kind, index))

    def put(self, entry: KnownValue) -> None:
        _validate(entry)
        self._entries[(entry.kind, entry.index)] = entry

    def entries(self) -> list[KnownValue]:
        """All entries sorted by (kind, index)."""
        return [self._entries[key] for key in sorted(self._entries)]

    # -- engine integration ---------------------------------------------------

    def seed_engine(self, engine: Ap3Engine) -> int:
        """Feed contiguous proven L levels into an engine; returns levels applied."""
        levels = {
            entry.index: (entry.value, entry.witness)
            for entry in self._entries.values()
            if entry.kind == KIND_LONGEST
        }
        return engine.seed(levels)

    def absorb_engine(self, engine: Ap3Engine) -> None:
        """Record every proven level of an engine, plus the span record for
        each size first attained."""
        reached = 0
        for m, value, witness in engine.proven_levels():
            self.put(KnownValue(KIND_LONGEST, m, value, witness))
            if value > reached:
                reached = value
                self.put(KnownValue(KIND_SPAN, value, m, witness))


def load_cache(path: str) -> ValueCache:
    """Read a cache file; malformed lines are rejected with their line number."""
    cache = ValueCache()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(" ")
            if len(parts) != 4:
                raise CacheFormatError(f"expected 4 fields, got {len(parts)}", lineno)
            kind, index_s, value_s, witness_s = parts
            try:
                index, value = int(index_s), int(value_s)
                witness = tuple(int(tok) for tok in witness_s.split(","))
            except ValueError:
                raise CacheFormatError(f"bad integer field in {line!r}", lineno) from None
            if cache.get(kind, index) is not None:
                raise CacheFormatError(f"duplicate record {kind} {index}", lineno)
            try:
                cache.put(KnownValue(kind, index, value, witness))
            except ValueError as exc:
                raise CacheFormatError(str(exc), lineno) from None
    return cache


def store_cache(cache: ValueCache, path: str) -> None:
    """Write the cache sorted by (kind, index); atomic via temp file + rename."""
    lines = [
        f"{e.kind} {e.index} {e.value} {','.join(map(str, e.witness))}\n"
        for e in cache.entries()
    ]
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cache-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.writelines(lines)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- reproduction report -------------------------------------------------------

STATUS_OK = "ok"
STATUS_MISMATCH = "mismatch"
STATUS_UNPROVEN = "unproven"
STATUS_COMPUTED = "computed"


@dataclass(frozen=True)
class TableRow:
    n: int
    computed: int | None
    reference: int | None
    witness: tuple[int, ...]
    status: str


def table_report(n_max: int, budget: SolveBudget | None = None,
                 engine: Ap3Engine | None = None) -> list[TableRow]:
    """Compute graceful chromatic numbers of complete graphs for n = 2..n_max
    and compare each against the embedded reference.

    One budget spans the whole run; once it is exhausted every remaining row
    is reported unproven.  Unproven rows never report a value.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    engine = engine or Ap3Engine()
    meter = BudgetMeter(budget)
    rows: list[TableRow] = []
    exhausted = False
    for n in range(2, n_max + 1):
        reference = known_chi_g_complete(n)
        if not exhausted:
            result = engine.min_span(n, meter=meter)
            if not result.proven:
                exhausted = True
        if exhausted:
            rows.append(TableRow(n, None, reference, (), STATUS_UNPROVEN))
            continue
        if reference is None:
            status = STATUS_COMPUTED
        elif result.value == reference:
            status = STATUS_OK
        else:
            status = STATUS_MISMATCH
        rows.append(TableRow(n, result.value, reference, result.witness, status))
    return rows


def render_table(rows: list[TableRow], records: bool = False) -> str:
    """Aligned text table, or line-oriented records "n chi_g status"."""
    if records:
        out = []
        for row in rows:
            value = row.computed if row.computed is not None else "-"
            out.append(f"{row.n} {value} {row.status}")
        return "\n".join(out) + "\n"
    lines = [f"{'n':>3}  {'chi_g':>6}  {'reference':>9}  {'status':>10}  witness"]
    for row in rows:
        computed = str(row.computed) if row.computed is not None else "-"
        reference = str(row.reference) if row.reference is not None else "-"
        witness = ",".join(map(str, row.witness))
        status = "** MISMATCH" if row.status == STATUS_MISMATCH else row.status
        lines.append(f"{row.n:>3}  {computed:>6}  {reference:>9}  {status:>10}  {witness}")
    return "\n".join(lines) + "\n"
