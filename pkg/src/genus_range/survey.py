"""Exhaustive genus-range surveys over all graphs of a given size.

A survey maps every canonical word of n letters to its boundary-count
histogram over all 2^n embeddings, then aggregates the genus ranges.  The map
runs in chunks on a thread pool (the tracing kernel releases the GIL) and
results are consumed in enumeration order, so output never depends on the
thread count.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from .enumeration import enumerate_canonical
from .errors import CapExceeded, SurveyFileError
from .families import psi, repeat_word
from .graph import build
from .ribbon import GenusRange, boundary_histogram, range_from_histogram
from .words import Dow, equivalent, loop_core, parse

__all__ = [
    "SURVEY_CAP",
    "THREADS_ENV",
    "SurveyRecord",
    "RangeFamily",
    "CheckpointState",
    "default_threads",
    "survey_word",
    "survey_records",
    "survey",
    "find_with_range",
    "emit_histogram",
    "record_to_json",
    "record_from_json",
    "checkpoint_write",
    "checkpoint_read",
    "run_survey_file",
    "conjecture_probe",
    "ProbeReport",
]

SURVEY_CAP = 9
THREADS_ENV = "GENUS_RANGE_THREADS"
_CHUNK = 256


@dataclass(frozen=True)
class SurveyRecord:
    word: Dow
    gr: GenusRange
    b_hist: dict

    @property
    def n(self) -> int:
        return self.word.n


@dataclass
class RangeFamily:
    """Genus ranges met among the classes of size n, with counts and witnesses."""

    n: int
    witness_limit: int = 1
    counts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    total: int = 0

    def add(self, rec: SurveyRecord):
        self.total += 1
        self.counts[rec.gr] = self.counts.get(rec.gr, 0) + 1
        found = self.witnesses.setdefault(rec.gr, [])
        if len(found) < self.witness_limit:
            found.append(rec.word)

    @property
    def ranges(self) -> list[GenusRange]:
        return sorted(self.counts)

    def __eq__(self, other):
        if not isinstance(other, RangeFamily):
            return NotImplemented
        return (self.n, self.total, self.counts, self.witnesses) == (
            other.n,
            other.total,
            other.counts,
            other.witnesses,
        )


def default_threads() -> int:
    value = os.environ.get(THREADS_ENV)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {value!r}") from None
    return 1


def survey_word(w: Dow) -> SurveyRecord:
    g = build(w)
    hist = boundary_histogram(g)
    return SurveyRecord(word=w, gr=range_from_histogram(g.n, hist), b_hist=dict(sorted(hist.items())))


def _chunks(words: Iterable[Dow], size: int) -> Iterator[list[Dow]]:
    chunk = []
    for w in words:
        chunk.append(w)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def _survey_chunk(words: list[Dow]) -> list[SurveyRecord]:
    return [survey_word(w) for w in words]


def _check_cap(n: int, cap: int):
    if n > cap:
        raw = math.prod(range(1, 2 * n, 2))
        raise CapExceeded(
            f"survey of n={n} refused (cap {cap}): about {raw:,} raw words to "
            f"classify and 2^{n} embeddings per class"
        )


def survey_records(
    n: int,
    threads: int | None = None,
    after: Dow | None = None,
    cap: int = SURVEY_CAP,
) -> Iterator[SurveyRecord]:
    """One record per canonical word, in lexicographic order."""
    _check_cap(n, cap)
    threads = default_threads() if threads is None else max(1, threads)
    chunks = _chunks(enumerate_canonical(n, after=after), _CHUNK)
    if threads == 1:
        for chunk in chunks:
            yield from _survey_chunk(chunk)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # bounded look-ahead keeps memory flat on large n
        pending = []
        for chunk in chunks:
            pending.append(pool.submit(_survey_chunk, chunk))
            if len(pending) >= 4 * threads:
                yield from pending.pop(0).result()
        for fut in pending:
            yield from fut.result()


def survey(
    n: int,
    witness_limit: int = 1,
    threads: int | None = None,
    cap: int = SURVEY_CAP,
) -> RangeFamily:
    fam = RangeFamily(n=n, witness_limit=witness_limit)
    for rec in survey_records(n, threads=threads, cap=cap):
        fam.add(rec)
    return fam


def find_with_range(n: int, r: GenusRange, limit: int = 10, threads: int | None = None) -> list[Dow]:
    """Lexicographically first canonical words of size n with genus range r."""
    out = []
    if limit <= 0:
        return out
    for rec in survey_records(n, threads=threads):
        if rec.gr == r:
            out.append(rec.word)
            if len(out) >= limit:
                break
    return out


def emit_histogram(f: RangeFamily, fmt: str = "csv", sink: IO[str] | None = None) -> str:
    """Render range counts sorted by (max, min) as CSV or JSON."""
    rows = [(r.min, r.max, f.counts[r]) for r in f.ranges]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["range_min", "range_max", "count"])
        writer.writerows(rows)
        text = buf.getvalue()
    elif fmt == "json":
        payload = [{"range_min": a, "range_max": b, "count": c} for a, b, c in rows]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        raise ValueError(f"unknown histogram format {fmt!r}")
    if sink is not None:
        sink.write(text)
    return text


# -- JSONL persistence -------------------------------------------------------


def record_to_json(rec: SurveyRecord) -> str:
    obj = {
        "word": str(rec.word),
        "n": rec.n,
        "gr": rec.gr.as_list(),
        "b_hist": {str(b): k for b, k in sorted(rec.b_hist.items())},
    }
    return json.dumps(obj, separators=(",", ":"))


def record_from_json(obj: dict) -> SurveyRecord:
    word = parse(obj["word"])
    if word.n != obj["n"]:
        raise ValueError("n does not match the word length")
    hist = {int(b): int(k) for b, k in obj["b_hist"].items()}
    gr = GenusRange(*obj["gr"])
    if range_from_histogram(word.n, hist) != gr:
        raise ValueError("genus range disagrees with the boundary histogram")
    if sum(hist.values()) != 1 << word.n:
        raise ValueError("boundary histogram does not total 2^n")
    return SurveyRecord(word=word, gr=gr, b_hist=hist)


@dataclass
class CheckpointState:
    records: list
    resume_after: Dow | None
    complete: bool


def _trailer(resume_after: Dow | None, complete: bool) -> str:
    if complete:
        return json.dumps({"complete": True}, separators=(",", ":"))
    word = "" if resume_after is None else str(resume_after)
    return json.dumps({"resume_after": word}, separators=(",", ":"))


def checkpoint_write(path, records: Iterable[SurveyRecord], complete: bool) -> None:
    """Write records plus a trailer naming the last completed word."""
    last = None
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(record_to_json(rec) + "\n")
            last = rec.word
        fh.write(_trailer(last, complete) + "\n")


def checkpoint_read(path) -> CheckpointState:
    """Load a checkpoint, failing with the line number of the first bad line."""
    records = []
    trailer = None
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        # a file not ending in a newline was cut mid-line
        if lines:
            raise SurveyFileError("truncated line (no terminating newline)", len(lines))
    for lineno, line in enumerate(lines, start=1):
        if trailer is not None:
            raise SurveyFileError("data after the trailer line", lineno)
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SurveyFileError(f"invalid JSON ({exc.msg})", lineno) from None
        if not isinstance(obj, dict):
            raise SurveyFileError("expected a JSON object", lineno)
        if "complete" in obj or "resume_after" in obj:
            trailer = obj
            continue
        try:
            records.append(record_from_json(obj))
        except (KeyError, TypeError, ValueError) as exc:
            raise SurveyFileError(f"bad survey record ({exc})", lineno) from None
    if trailer is None:
        raise SurveyFileError("trailer line missing; file is incomplete")
    if trailer.get("complete") is True:
        return CheckpointState(records, records[-1].word if records else None, True)
    text = trailer.get("resume_after")
    if not isinstance(text, str):
        raise SurveyFileError("malformed trailer", len(lines))
    after = parse(text) if text else None
    if records and after != records[-1].word:
        raise SurveyFileError("trailer word does not match the last record", len(lines))
    return CheckpointState(records, after, False)


def run_survey_file(
    n: int,
    path,
    resume: bool = False,
    threads: int | None = None,
    max_records: int | None = None,
    checkpoint_every: int = 2048,
    witness_limit: int = 1,
) -> tuple[RangeFamily, bool]:
    """Survey size n into a JSONL checkpoint at ``path``.

    With ``resume`` an existing checkpoint is continued after its trailer
    word.  ``max_records`` stops early (the file then ends with a resume
    trailer).  Returns the family of all records in the file and whether the
    survey is complete.
    """
    path = Path(path)
    fam = RangeFamily(n=n, witness_limit=witness_limit)
    after = None
    if resume and path.exists():
        state = checkpoint_read(path)
        for rec in state.records:
            if rec.n != n:
                raise SurveyFileError(f"checkpoint holds n={rec.n} records, not n={n}")
            fam.add(rec)
        if state.complete:
            return fam, True
        after = state.resume_after
        with open(path, "rb") as fh:
            data = fh.read()
        # drop the old trailer (last line) before appending
        cut = data.rstrip(b"\n").rfind(b"\n") + 1
        resume_offset = cut
    else:
        resume_offset = None

    fh = open(path, "r+" if resume_offset is not None else "w", encoding="utf-8", newline="\n")
    try:
        if resume_offset is not None:
            fh.seek(resume_offset)
            fh.truncate()
        done = 0
        last = after
        complete = True
        for rec in survey_records(n, threads=threads, after=after):
            if max_records is not None and done >= max_records:
                complete = False
                break
            fh.write(record_to_json(rec) + "\n")
            fam.add(rec)
            last = rec.word
            done += 1
            if done % checkpoint_every == 0:
                pos = fh.tell()
                fh.write(_trailer(last, False) + "\n")
                fh.flush()
                fh.seek(pos)
                fh.truncate()
        fh.write(_trailer(last, complete) + "\n")
    finally:
        fh.close()
    return fam, complete


# -- conjecture probes ----------------------------------------------------------


@dataclass
class ProbeReport:
    n: int
    kind: str
    checked: int
    findings: list

    def render(self) -> str:
        lines = [f"probe {self.kind} n={self.n}: {self.checked} classes checked"]
        if not self.findings:
            lines.append("no counterexamples found")
        for item in self.findings:
            lines.append(str(item))
        return "\n".join(lines)


def _is_repeat_nesting(w: Dow) -> bool:
    core = loop_core(w)
    k = len(core) // 2
    return k % 2 == 1 and k >= 3 and equivalent(Dow(core), repeat_word(k))


def conjecture_probe(n: int, which: str, threads: int | None = None) -> ProbeReport:
    """Search the size-n survey for counterexamples to the two open claims.

    ``singleton-gap`` lists [h, h] ranges with h above psi(n);
    ``zero-one`` lists [0, 1] words that are not loop nestings of a repeat
    word 1 2 ... k 1 2 ... k with k odd.
    """
    if which not in ("singleton-gap", "zero-one"):
        raise ValueError(f"unknown probe {which!r}")
    findings = []
    checked = 0
    limit = psi(n).psi if n >= 1 else 0
    for rec in survey_records(n, threads=threads):
        checked += 1
        if which == "singleton-gap":
            if rec.gr.min == rec.gr.max and rec.gr.min > limit:
                findings.append(f"{rec.gr} {rec.word}")
        elif rec.gr == GenusRange(0, 1) and not _is_repeat_nesting(rec.word):
            findings.append(f"{rec.gr} {rec.word}")
    return ProbeReport(n=n, kind=which, checked=checked, findings=findings)
