"""Configuration file support for deplin."""
import os
import sys
import types
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Union, get_args, get_origin, get_type_hints

from deplin.exceptions import ConfigurationError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

CONFIG_FILENAME = "deplin.toml"
THREADS_ENV_VAR = "DEPLIN_THREADS"

DEFAULT_FUNCTION_WORDS = ("ADP", "AUX", "CCONJ", "DET", "PART", "PRON", "SCONJ")


def default_threads() -> int:
    """Thread count from ``DEPLIN_THREADS``, else the number of CPUs."""
    value = os.environ.get(THREADS_ENV_VAR)
    if value:
        try:
            threads = int(value)
        except ValueError as e:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be an integer, got {value!r}") from e
        if threads < 1:
            raise ConfigurationError(f"{THREADS_ENV_VAR} must be positive, got {threads}")
        return threads
    return os.cpu_count() or 1


def _matches(value: Any, expected: Any) -> bool:
    """Whether a TOML value fits a dataclass field annotation."""
    origin = get_origin(expected)
    if origin is list:
        (item,) = get_args(expected)
        return isinstance(value, list) and all(_matches(v, item) for v in value)
    if origin in (Union, types.UnionType):
        return any(_matches(value, arg) for arg in get_args(expected))
    if expected is type(None):
        return value is None
    if expected is int:
        return isinstance(value, int) and not isinstance(value, bool)
    return isinstance(value, expected)


def _check_types(name: str, section_type: type, section: dict[str, Any]) -> None:
    hints = get_type_hints(section_type)
    for key, value in section.items():
        if not _matches(value, hints[key]):
            expected = getattr(hints[key], "__name__", str(hints[key]))
            raise ConfigurationError(
                f"[{name}] {key} must be {expected}, got {type(value).__name__} {value!r}"
            )


@dataclass
class AnalysisConfig:
    """Treebank analysis configuration."""

    features: list[str] = field(default_factory=list)
    error_policy: str = "skip_and_report"
    threads: int = 0
    exact_rationals: bool = False
    float_digits: int = 6

    def resolved_threads(self) -> int:
        return self.threads if self.threads > 0 else default_threads()


@dataclass
class LimitsConfig:
    """Bounds on exhaustive enumeration."""

    exhaustive_max_n: int = 10
    max_arrangement_ensemble: int = 10_000_000
    max_tree_ensemble: int = 1_000_000


@dataclass
class ConlluConfig:
    """CoNLL-U preprocessing configuration."""

    remove_punct: bool = False
    remove_function_words: bool = False
    function_words: list[str] = field(default_factory=lambda: list(DEFAULT_FUNCTION_WORDS))
    min_len: int | None = None
    max_len: int | None = None


@dataclass
class GenerationConfig:
    """Random generation configuration."""

    seed: int | None = None


DEFAULT_LIMITS = LimitsConfig()


@dataclass
class DeplinConfig:
    """Complete configuration for deplin."""

    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    conllu: ConlluConfig = field(default_factory=ConlluConfig)
    generation: GenerationConfig = field(default_factory=GenerationConfig)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "DeplinConfig":
        """Create config from dictionary."""
        config = cls()
        sections: dict[str, type] = {
            "analysis": AnalysisConfig,
            "limits": LimitsConfig,
            "conllu": ConlluConfig,
            "generation": GenerationConfig,
        }
        for name in data:
            if name not in sections:
                raise ConfigurationError(f"Unknown configuration section [{name}]")
        for name, section_type in sections.items():
            if name not in data:
                continue
            section = data[name]
            if not isinstance(section, dict):
                raise ConfigurationError(f"[{name}] must be a table")
            known = {f.name for f in fields(section_type)}
            unknown = sorted(set(section) - known)
            if unknown:
                raise ConfigurationError(f"Unknown keys in [{name}]: {', '.join(unknown)}")
            _check_types(name, section_type, section)
            setattr(config, name, section_type(**section))

        if config.analysis.error_policy not in ("fail_fast", "skip_and_report"):
            raise ConfigurationError(
                f"error_policy must be fail_fast or skip_and_report, "
                f"got {config.analysis.error_policy!r}"
            )
        lo, hi = config.conllu.min_len, config.conllu.max_len
        if lo is not None and hi is not None and lo > hi:
            raise ConfigurationError(f"min_len ({lo}) exceeds max_len ({hi})")
        return config

    def to_dict(self) -> dict[str, Any]:
        """Convert config to dictionary."""
        data = asdict(self)
        # TOML has no null
        for section in data.values():
            for key in [k for k, v in section.items() if v is None]:
                del section[key]
        return data


def load_config(path: Path | str | None = None) -> DeplinConfig:
    """Load configuration from file.

    Args:
        path: Path to configuration file. If None, looks for deplin.toml in the
            current directory and then ~/.deplin.toml.

    Returns:
        DeplinConfig instance.

    Raises:
        ConfigurationError: If config file is invalid or not found.
    """
    if path is None:
        possible_paths = [
            Path.cwd() / CONFIG_FILENAME,
            Path.home() / f".{CONFIG_FILENAME}",
        ]
        for p in possible_paths:
            if p.exists():
                path = p
                break
        else:
            return DeplinConfig()

    if isinstance(path, str):
        path = Path(path)

    if not path.exists():
        raise ConfigurationError(f"Configuration file not found: {path}")

    try:
        with open(path, "rb") as f:
            data = tomllib.load(f)
        return DeplinConfig.from_dict(data)
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationError(f"Invalid TOML in {path}: {e}") from e
    except TypeError as e:
        raise ConfigurationError(f"Invalid configuration in {path}: {e}") from e
    except OSError as e:
        raise ConfigurationError(f"Failed to read {path}: {e}") from e
