"""Resource caps and their environment overrides."""

import logging
import os
from dataclasses import dataclass

LOGGER = logging.getLogger(__name__)

ENV_PREFIX = "MONODEC_"


@dataclass(frozen=True)
class Caps:
    """Limits that turn exponential searches into explicit cap outcomes."""

    max_variables: int = 64
    max_vertices: int = 16
    max_hilbert_generators: int = 20
    max_lq_generators: int = 20
    max_orderings: int = 9
    max_facets: int = 12
    search_budget: int = 200_000


DEFAULT_CAPS = Caps()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(ENV_PREFIX + name.upper())
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        LOGGER.warning(f"Ignoring {ENV_PREFIX}{name.upper()}={raw!r}: not an integer")
        return default
    if value < 1:
        LOGGER.warning(f"Ignoring {ENV_PREFIX}{name.upper()}={raw!r}: must be positive")
        return default
    return value


def load_caps() -> Caps:
    """Build caps from the defaults, overridden by MONODEC_* environment variables."""
    return Caps(
        max_variables=_env_int("max_variables", DEFAULT_CAPS.max_variables),
        max_vertices=_env_int("max_vertices", DEFAULT_CAPS.max_vertices),
        max_hilbert_generators=_env_int(
            "max_hilbert_generators", DEFAULT_CAPS.max_hilbert_generators
        ),
        max_lq_generators=_env_int("max_lq_generators", DEFAULT_CAPS.max_lq_generators),
        max_orderings=_env_int("max_orderings", DEFAULT_CAPS.max_orderings),
        max_facets=_env_int("max_facets", DEFAULT_CAPS.max_facets),
        search_budget=_env_int("search_budget", DEFAULT_CAPS.search_budget),
    )
