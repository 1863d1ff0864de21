"""Reference table of knots through 7 crossings.

Each entry pairs a braid-word representative with literature unknotting
numbers and a cached invariant profile.  The table ships as a plain-text
file; loading recomputes every cached value and refuses to start on any
mismatch, so the data file cannot drift from the code that interprets it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .braid import BraidWord
from .laurent import LaurentPolynomial
from .profiles import InvariantProfile, UNKNOT_PROFILE_KEY, profile_of_braid

_DATA_PACKAGE = "knotsum.data"
_TABLE_FILE = "knots.txt"


class TableError(Exception):
    """Raised when the shipped table fails load-time validation."""


@dataclass(frozen=True)
class KnotTableEntry:
    """One reference knot: braid representative plus curated data.

    unknotting_number is literature data (see source column in the data
    file); the loader cross-checks it internally where it can.  The
    nakanishi_index ships unset and may be supplied through the distance
    data file instead.
    """

    name: str
    crossings: int
    word: BraidWord
    unknotting_number: int
    unknotting_source: str
    nakanishi_index: int | None
    profile: InvariantProfile

    def fingerprint(self) -> tuple:
        return self.profile.fingerprint()


def _parse_row(line: str, lineno: int) -> KnotTableEntry:
    parts = line.split()
    if len(parts) != 11:
        raise TableError(f"line {lineno}: expected 11 fields, got {len(parts)}")
    name, crossings, strands, word, u, usource, e, sigma, det, genus, alex = parts
    try:
        letters = tuple(int(v) for v in word.split(","))
        braid = BraidWord(int(strands), letters)
        cached = InvariantProfile(
            alexander=LaurentPolynomial.parse(alex),
            signature=int(sigma),
            determinant=int(det),
            canonical_genus_bound=int(genus),
            components=1,
        )
        return KnotTableEntry(
            name=name,
            crossings=int(crossings),
            word=braid,
            unknotting_number=int(u),
            unknotting_source=usource,
            nakanishi_index=None if e == "-" else int(e),
            profile=cached,
        )
    except (ValueError, TypeError) as exc:
        raise TableError(f"line {lineno}: {exc}") from exc


def _single_flip_unknots(word: BraidWord) -> bool:
    for i in range(len(word.letters)):
        letters = list(word.letters)
        letters[i] = -letters[i]
        p = profile_of_braid(BraidWord(word.strands, tuple(letters)))
        if p.fingerprint() == UNKNOT_PROFILE_KEY:
            return True
    return False


def _validate(entries: list[KnotTableEntry]) -> list[str]:
    report = []
    seen: dict[tuple, str] = {}
    names: set[str] = set()
    for entry in entries:
        checks = []
        if entry.name in names:
            raise TableError(f"{entry.name}: duplicate name")
        names.add(entry.name)

        recomputed = profile_of_braid(entry.word)
        if recomputed != entry.profile:
            raise TableError(
                f"{entry.name}: cached profile disagrees with recomputation "
                f"(cached {entry.profile.serialize()}, got {recomputed.serialize()})"
            )
        checks.append("profile")
        if not recomputed.is_knot:
            raise TableError(f"{entry.name}: closure is not a knot")
        checks.append("knot closure")

        key = entry.fingerprint()
        if key in seen:
            raise TableError(
                f"{entry.name}: fingerprint collides with {seen[key]}"
            )
        seen[key] = entry.name
        checks.append("unique fingerprint")

        # u >= |sigma|/2 always; u = 1 rows must expose a one-flip unknotting.
        if 2 * entry.unknotting_number < abs(entry.profile.signature):
            raise TableError(
                f"{entry.name}: u={entry.unknotting_number} below signature bound"
            )
        checks.append("signature bound")
        if entry.unknotting_number == 0:
            if key != UNKNOT_PROFILE_KEY:
                raise TableError(f"{entry.name}: u=0 but profile is nontrivial")
            checks.append("u=0 witnessed")
        elif entry.unknotting_number == 1:
            if not _single_flip_unknots(entry.word):
                raise TableError(
                    f"{entry.name}: u=1 but no single letter flip trivializes"
                )
            checks.append("u=1 witnessed")
        report.append(f"{entry.name}: {', '.join(checks)} ok")
    return report


@functools.lru_cache(maxsize=1)
def _load() -> tuple[Mapping[str, KnotTableEntry], tuple[str, ...]]:
    text = resources.files(_DATA_PACKAGE).joinpath(_TABLE_FILE).read_text()
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(_parse_row(line, lineno))
    if not entries:
        raise TableError("table file holds no entries")
    report = _validate(entries)
    return {e.name: e for e in entries}, tuple(report)


def load_table() -> Mapping[str, KnotTableEntry]:
    """All entries keyed by name, validated once per process."""
    return _load()[0]


def validation_report() -> tuple[str, ...]:
    """Per-entry lines describing which load-time checks passed."""
    return _load()[1]


def table_names() -> tuple[str, ...]:
    return tuple(load_table())


def lookup(name: str) -> KnotTableEntry:
    """Entry for a table knot; unknown names raise KeyError."""
    table = load_table()
    if name not in table:
        raise KeyError(f"unknown knot name: {name}")
    return table[name]


def match_profile(profile: InvariantProfile) -> list[str]:
    """Table names whose invariants match, ignoring chirality.

    Compares determinant, |signature|, and the Alexander polynomial up to
    the t -> 1/t flip.  Several names may match; none is a valid answer.
    """
    det = profile.determinant
    sig = abs(profile.signature)
    alex = profile.alexander.normalized()
    alex_mirror = alex.mirror().normalized()
    hits = []
    for entry in load_table().values():
        if entry.profile.determinant != det:
            continue
        if abs(entry.profile.signature) != sig:
            continue
        if entry.profile.alexander in (alex, alex_mirror):
            hits.append(entry.name)
    return hits
