"""Treebank and collection processing into CSV feature tables."""
import csv
import logging
import multiprocessing
import time
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from functools import partial
from itertools import chain, islice
from pathlib import Path
from typing import Any, TextIO

from deplin.config import AnalysisConfig
from deplin.exceptions import DuplicateOutputError, InputNotFoundError, WriteError
from deplin.graphs import from_head_vector
from deplin.io.features import FeatureSpec, Value, render_value
from deplin.io.treebank import ErrorPolicy, TreebankSource

logger = logging.getLogger(__name__)

_CHUNK = 64


@dataclass(frozen=True)
class ProcessingOptions:
    error_policy: ErrorPolicy = ErrorPolicy.SKIP_AND_REPORT
    threads: int = 1
    exact_rationals: bool = False
    float_digits: int = 6
    merge: bool = False

    @classmethod
    def from_config(cls, config: AnalysisConfig, **overrides: Any) -> "ProcessingOptions":
        options = cls(
            error_policy=ErrorPolicy(config.error_policy),
            threads=config.resolved_threads(),
            exact_rationals=config.exact_rationals,
            float_digits=config.float_digits,
        )
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(options, **values)


@dataclass(frozen=True)
class SkippedSentence:
    line: int
    reason: str


@dataclass
class ProcessingReport:
    input_path: Path
    output_path: Path | None = None
    sentences_processed: int = 0
    skipped: list[SkippedSentence] = field(default_factory=list)
    sentences_filtered: int = 0
    elapsed: float = 0.0
    missing: list[Path] = field(default_factory=list)

    @property
    def sentences_skipped(self) -> int:
        return len(self.skipped)

    def summary(self) -> str:
        parts = [f"{self.sentences_processed} processed", f"{self.sentences_skipped} skipped"]
        if self.sentences_filtered:
            parts.append(f"{self.sentences_filtered} filtered")
        if self.missing:
            parts.append(f"{len(self.missing)} missing")
        return f"{self.input_path.name}: {', '.join(parts)} in {self.elapsed:.2f}s"


def _compute_row(
    job: tuple[int, tuple[int, ...]], names: tuple[str, ...]
) -> tuple[int, list[Value | None]]:
    sentence_id, heads = job
    return sentence_id, FeatureSpec(names).compute(from_head_vector(heads))


@contextmanager
def open_output(path: Path) -> Iterator[TextIO]:
    """Write ``path`` through a staging file that replaces it only on success.

    If the block raises, the staging file is removed and any existing
    ``path`` is left untouched.
    """
    staging = path.with_name(f".{path.name}.part")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        out = open(staging, "w", encoding="utf-8", newline="")
    except OSError as e:
        raise WriteError(path, e.strerror or str(e)) from e
    try:
        with out:
            yield out
    except BaseException:
        staging.unlink(missing_ok=True)
        raise
    try:
        staging.replace(path)
    except OSError as e:
        staging.unlink(missing_ok=True)
        raise WriteError(path, e.strerror or str(e)) from e


class TreebankProcessor:
    """Computes a feature table for each sentence of one or more treebanks.

    Rows follow input order whatever the number of worker processes.
    """

    def __init__(
        self, features: FeatureSpec | None = None, options: ProcessingOptions | None = None
    ) -> None:
        self.features = features or FeatureSpec.from_names()
        self.options = options or ProcessingOptions()

    @contextmanager
    def _pool(self) -> Iterator[Any]:
        if self.options.threads <= 1:
            yield None
            return
        with multiprocessing.Pool(self.options.threads) as pool:
            yield pool

    def _render(self, values: Iterable[Value | None]) -> list[str]:
        return [
            render_value(v, self.options.exact_rationals, self.options.float_digits) for v in values
        ]

    def _jobs(
        self, input_path: Path, report: ProcessingReport
    ) -> Iterator[tuple[int, tuple[int, ...]]]:
        source = TreebankSource(input_path, self.options.error_policy)
        for sentence_id, record in enumerate(source, start=1):
            if record.ok:
                assert record.heads is not None
                yield sentence_id, record.heads.heads
            else:
                assert record.error is not None
                report.skipped.append(SkippedSentence(record.line, record.error.reason))

    def _rows(self, input_path: Path, report: ProcessingReport, pool: Any) -> Iterator[list[str]]:
        """Rendered rows ``[sentence_id, n, ...]``; skipped lines are recorded in ``report``.

        With a pool the treebank is read one bounded batch at a time, in this process.
        """
        jobs = self._jobs(input_path, report)
        compute = partial(_compute_row, names=self.features.names)
        results: Iterable[tuple[int, list[Value | None]]]
        if pool is None:
            results = map(compute, jobs)
        else:
            batch_size = _CHUNK * self.options.threads
            batches = iter(lambda: list(islice(jobs, batch_size)), [])
            results = chain.from_iterable(
                pool.imap(compute, batch, chunksize=_CHUNK) for batch in batches
            )
        for sentence_id, values in results:
            report.sentences_processed += 1
            yield [str(sentence_id), *self._render(values)]

    def process_treebank(self, input_path: Path | str, output_path: Path | str) -> ProcessingReport:
        input_path, output_path = Path(input_path), Path(output_path)
        if not input_path.is_file():
            raise InputNotFoundError(input_path)
        started = time.perf_counter()
        report = ProcessingReport(input_path=input_path, output_path=output_path)
        logger.info("processing %s", input_path)

        with self._pool() as pool, open_output(output_path) as out:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(self.features.header())
            for row in self._rows(input_path, report, pool):
                writer.writerow(row)

        report.elapsed = time.perf_counter() - started
        logger.info(report.summary())
        return report

    def process_collection(
        self, list_path: Path | str, output: Path | str
    ) -> list[ProcessingReport]:
        """Process every treebank named in ``list_path``.

        ``output`` is a directory receiving one CSV per treebank or, with the
        ``merge`` option, a single CSV with a leading ``treebank`` column.
        """
        list_path, output = Path(list_path), Path(output)
        members = read_collection_list(list_path)
        reports: list[ProcessingReport] = []
        missing = []
        present = []
        for member in members:
            if member.is_file():
                present.append(member)
            elif self.options.error_policy is ErrorPolicy.FAIL_FAST:
                raise InputNotFoundError(member)
            else:
                logger.warning("collection member not found: %s", member)
                missing.append(member)
        logger.info("collection %s: %d treebanks", list_path, len(present))

        if self.options.merge:
            with self._pool() as pool, open_output(output) as out:
                writer = csv.writer(out, lineterminator="\n")
                writer.writerow(["treebank", *self.features.header()])
                for member in present:
                    started = time.perf_counter()
                    report = ProcessingReport(input_path=member, output_path=output)
                    for row in self._rows(member, report, pool):
                        writer.writerow([member.name, *row])
                    report.elapsed = time.perf_counter() - started
                    reports.append(report)
        else:
            targets = _output_names(present, output)
            for member in present:
                reports.append(self.process_treebank(member, targets[member]))

        if reports:
            reports[0].missing.extend(missing)
        elif missing:
            reports.append(ProcessingReport(input_path=list_path, missing=missing))
        return reports


def _output_names(members: list[Path], outdir: Path) -> dict[Path, Path]:
    """One ``<stem>.csv`` per member; two members may not share a stem."""
    targets: dict[Path, Path] = {}
    owners: dict[Path, Path] = {}
    for member in members:
        target = outdir / f"{member.stem}.csv"
        if target in owners and owners[target] != member:
            raise DuplicateOutputError(
                f"{owners[target]} and {member} would both be written to {target}"
            )
        owners[target] = member
        targets[member] = target
    return targets


def read_collection_list(list_path: Path) -> list[Path]:
    """Treebank paths listed one per line; ``#`` lines are comments."""
    if not list_path.is_file():
        raise InputNotFoundError(list_path)
    members = []
    for line in list_path.read_text(encoding="utf-8").splitlines():
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        path = Path(entry)
        members.append(path if path.is_absolute() else list_path.parent / path)
    return members


def process_treebank(
    input_path: Path | str,
    output_path: Path | str,
    features: FeatureSpec | None = None,
    options: ProcessingOptions | None = None,
) -> ProcessingReport:
    return TreebankProcessor(features, options).process_treebank(input_path, output_path)


def process_collection(
    list_path: Path | str,
    output: Path | str,
    features: FeatureSpec | None = None,
    options: ProcessingOptions | None = None,
) -> list[ProcessingReport]:
    return TreebankProcessor(features, options).process_collection(list_path, output)
