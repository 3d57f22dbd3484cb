"""Runtime settings read from arguments or environment variables."""

import os
from typing import Optional

from extscope.errors import UsageError
from extscope.utils import parse_level

DEFAULT_DEGREE_CAP = 20
DEFAULT_SEED = 0
DEFAULT_CORPUS_SIZE = 100
DEFAULT_LOG_LEVEL = 'WARNING'


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name, None)

    if raw is None or raw.strip() == '':
        return default

    try:
        return int(raw)
    except ValueError as error:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from error


class Settings:
    """Computation settings. Explicit arguments win over environment variables, which win over defaults.

    :param degree_cap: Highest S-pair degree a Groebner computation may reach (env: EXTSCOPE_DEGREE_CAP)
    :param window: Homological window for gamma and other truncated computations (env: EXTSCOPE_WINDOW)
    :param log_level: Logger level name or number (env: EXTSCOPE_LOG_LEVEL)
    :param seed: Seed of the random corpora (env: EXTSCOPE_SEED)
    :param corpus_size: Number of random instances per property suite (env: EXTSCOPE_CORPUS_SIZE)
    """

    def __init__(
        self,
        degree_cap: Optional[int] = None,
        window: Optional[int] = None,
        log_level: Optional[str] = None,
        seed: Optional[int] = None,
        corpus_size: Optional[int] = None
    ):
        self.__degree_cap = degree_cap if degree_cap is not None else _env_int(
            'EXTSCOPE_DEGREE_CAP', DEFAULT_DEGREE_CAP
        )
        self.__window = window if window is not None else _env_int('EXTSCOPE_WINDOW', None)
        self.__log_level = parse_level(log_level if log_level else os.getenv('EXTSCOPE_LOG_LEVEL', DEFAULT_LOG_LEVEL))
        self.__seed = seed if seed is not None else _env_int('EXTSCOPE_SEED', DEFAULT_SEED)
        self.__corpus_size = corpus_size if corpus_size is not None else _env_int(
            'EXTSCOPE_CORPUS_SIZE', DEFAULT_CORPUS_SIZE
        )

        if self.__degree_cap < 1:
            raise UsageError(f"degree cap must be positive, got {self.__degree_cap}")
        if self.__window is not None and self.__window < 0:
            raise UsageError(f"window must be non-negative, got {self.__window}")
        if self.__corpus_size < 0:
            raise UsageError(f"corpus size must be non-negative, got {self.__corpus_size}")

    @property
    def degree_cap(self) -> int:
        """Highest S-pair degree."""
        return self.__degree_cap

    @property
    def window(self) -> Optional[int]:
        """Homological window, None means the ring dimension."""
        return self.__window

    @property
    def log_level(self) -> int:
        """Logging level."""
        return self.__log_level

    @property
    def seed(self) -> int:
        """Corpus seed."""
        return self.__seed

    @property
    def corpus_size(self) -> int:
        """Corpus size."""
        return self.__corpus_size

    def to_json(self) -> dict:
        """Settings echoed into reports."""

        return {
            'degree_cap': self.__degree_cap,
            'window': self.__window,
            'seed': self.__seed,
            'corpus_size': self.__corpus_size,
        }
