"""OEIS b-file parsing, offset alignment, and fixture-backed retrieval.

A b-file is the plain-text OEIS term listing: one "<index> <value>" pair
per line, '#'-prefixed lines ignored, indices contiguous.  Alignment finds
the shift between this package's W_0-based indexing and the b-file's own
offset by searching a small window of candidate shifts.

All bundled tests run offline from fixtures; network retrieval is an
explicit opt-in that caches into the fixture directory.
"""

from __future__ import annotations

import enum
import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .core import SequenceDef, term_iterative

FIXTURE_DIR_ENV = "TRIBSUM_FIXTURE_DIR"

# Candidate index shifts, smallest first.  The window reaches to +6 because
# the Padovan entry sits five positions deep in its b-file.
SHIFT_WINDOW = range(-3, 7)

# Consecutive matching terms required to declare an alignment.
MIN_MATCHED_TERMS = 10

_OEIS_ID_RE = re.compile(r"^A(\d{6})$")
_LINE_RE = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


class MalformedBFile(ValueError):
    """A b-file line failed to parse or the indices are not contiguous."""


class FixtureMissing(FileNotFoundError):
    """No fixture file exists for the requested OEIS ID."""


class FetchFailed(OSError):
    """Network retrieval of a b-file failed."""


class Source(enum.Enum):
    NETWORK = "network"
    FIXTURE_DIR = "fixture-dir"


class AlignmentStatus(enum.Enum):
    ALIGNED = "aligned"
    NO_ALIGNMENT = "no-alignment"


@dataclass(frozen=True)
class BFile:
    oeis_id: str
    entries: tuple[tuple[int, int], ...]

    @property
    def offset(self) -> int:
        return self.entries[0][0]

    def value_at(self, index: int) -> int:
        first = self.offset
        if not first <= index <= self.entries[-1][0]:
            raise IndexError(f"index {index} outside b-file range")
        return self.entries[index - first][1]


@dataclass(frozen=True)
class AlignmentReport:
    oeis_id: str
    shift: Optional[int]
    matched_terms: int
    status: AlignmentStatus


def parse_bfile(content: str, oeis_id: str = "") -> BFile:
    """Parse b-file text; raises :class:`MalformedBFile` on any defect."""
    entries: list[tuple[int, int]] = []
    for lineno, line in enumerate(content.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _LINE_RE.match(stripped)
        if m is None:
            raise MalformedBFile(f"line {lineno}: cannot parse {line!r}")
        index, value = int(m.group(1)), int(m.group(2))
        if entries and index != entries[-1][0] + 1:
            raise MalformedBFile(
                f"line {lineno}: index {index} breaks contiguity "
                f"(previous {entries[-1][0]})")
        entries.append((index, value))
    if not entries:
        raise MalformedBFile("no data lines")
    return BFile(oeis_id, tuple(entries))


def serialize_bfile(bfile: BFile) -> str:
    return "".join(f"{i} {v}\n" for i, v in bfile.entries)


def align(seq: SequenceDef, bfile: BFile,
          min_match: int = MIN_MATCHED_TERMS) -> AlignmentReport:
    """Search for the smallest shift aligning *seq* with *bfile*.

    A shift sigma matches when term(n) == b-file value at index n + sigma
    for at least *min_match* consecutive n starting at the first
    overlapping index.
    """
    lo, hi = bfile.offset, bfile.entries[-1][0]
    for sigma in SHIFT_WINDOW:
        n0 = lo - sigma
        if seq.params.t == 0:
            n0 = max(n0, 0)
        matched = 0
        for n in range(n0, hi - sigma + 1):
            if term_iterative(seq, n) != bfile.value_at(n + sigma):
                break
            matched += 1
        if matched >= min_match:
            return AlignmentReport(bfile.oeis_id, sigma, matched,
                                   AlignmentStatus.ALIGNED)
    return AlignmentReport(bfile.oeis_id, None, 0, AlignmentStatus.NO_ALIGNMENT)


def _fixture_filename(oeis_id: str) -> str:
    m = _OEIS_ID_RE.match(oeis_id)
    if m is None:
        raise FixtureMissing(f"not a valid OEIS ID: {oeis_id!r}")
    return f"b{m.group(1)}.txt"


def default_fixture_dir() -> Path:
    """The fixture directory: env override, else the bundled package data."""
    env = os.environ.get(FIXTURE_DIR_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("tribsum") / "fixtures"))


def _fetch_from_network(oeis_id: str, cache_dir: Path) -> str:
    url = f"https://oeis.org/{oeis_id}/{_fixture_filename(oeis_id)}"
    try:
        with urllib.request.urlopen(url, timeout=30) as response:
            content = response.read().decode("utf-8")
    except (urllib.error.URLError, OSError, UnicodeDecodeError) as exc:
        raise FetchFailed(f"could not fetch {url}: {exc}") from exc
    # Atomic create-then-rename so concurrent writers never interleave.
    cache_dir.mkdir(parents=True, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(content)
        os.replace(tmp_path, cache_dir / _fixture_filename(oeis_id))
    except OSError:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    return content


def fetch_bfile(oeis_id: str, source: Source = Source.FIXTURE_DIR,
                fixture_dir: Optional[Path] = None) -> BFile:
    """Load a b-file from the fixture directory or from oeis.org."""
    directory = fixture_dir if fixture_dir is not None else default_fixture_dir()
    if source is Source.NETWORK:
        return parse_bfile(_fetch_from_network(oeis_id, directory), oeis_id)
    path = directory / _fixture_filename(oeis_id)
    if not path.is_file():
        raise FixtureMissing(f"no fixture for {oeis_id} at {path}")
    return parse_bfile(path.read_text(), oeis_id)
