from deplin.conllu.convert import ConlluConverter, convert
from deplin.conllu.parser import ConlluParser, ConlluSentence, ConlluToken, parse_conllu
from deplin.conllu.preprocess import Filtered, PreprocessOptions, preprocess

__all__ = [
    "ConlluConverter",
    "ConlluParser",
    "ConlluSentence",
    "ConlluToken",
    "Filtered",
    "PreprocessOptions",
    "convert",
    "parse_conllu",
    "preprocess",
]
