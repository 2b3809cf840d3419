"""CoNLL-U to head-vector conversion."""
import logging
import time
from pathlib import Path

from deplin.conllu.parser import ConlluParser
from deplin.conllu.preprocess import Filtered, PreprocessOptions, preprocess
from deplin.exceptions import InputNotFoundError, ParseError
from deplin.io import DECODE_ERRORS, ErrorPolicy, ProcessingReport, SkippedSentence, open_output

logger = logging.getLogger(__name__)


class ConlluConverter:
    def __init__(
        self,
        options: PreprocessOptions | None = None,
        error_policy: ErrorPolicy = ErrorPolicy.SKIP_AND_REPORT,
    ) -> None:
        self.options = options or PreprocessOptions()
        self.error_policy = error_policy
        self._parser = ConlluParser()

    def convert_file(self, input_path: Path | str, output_path: Path | str) -> ProcessingReport:
        """Write one head vector per retained sentence, in input order."""
        input_path, output_path = Path(input_path), Path(output_path)
        if not input_path.is_file():
            raise InputNotFoundError(input_path)
        started = time.perf_counter()
        report = ProcessingReport(input_path=input_path, output_path=output_path)

        with (
            open(input_path, encoding="utf-8", errors=DECODE_ERRORS) as src,
            open_output(output_path) as out,
        ):
            for block in self._parser.blocks(src):
                try:
                    sentence = self._parser.parse_block(block)
                    if not sentence.tokens:
                        continue
                    result = preprocess(sentence, self.options)
                except ParseError as e:
                    if self.error_policy is ErrorPolicy.FAIL_FAST:
                        raise
                    logger.warning("%s: skipping sentence: %s", input_path.name, e)
                    report.skipped.append(SkippedSentence(e.line or block[0][0], e.reason))
                    continue
                if isinstance(result, Filtered):
                    logger.debug("sentence at line %d filtered: %s", block[0][0], result.reason)
                    report.sentences_filtered += 1
                    continue
                out.write(f"{result}\n")
                report.sentences_processed += 1

        report.elapsed = time.perf_counter() - started
        logger.info(report.summary())
        return report


def convert(
    input_path: Path | str,
    output_path: Path | str,
    options: PreprocessOptions | None = None,
    error_policy: ErrorPolicy = ErrorPolicy.SKIP_AND_REPORT,
) -> ProcessingReport:
    return ConlluConverter(options, error_policy).convert_file(input_path, output_path)
