"""
Settings resolution.

Precedence, highest first: command-line flags, the JSON config file given
with ``--config``, environment variables ``CIRCLE_RESTRICTION_<FIELD>``
(after ``load_dotenv()``), built-in defaults.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from circle_restriction.cache import IntegralStore, set_integral_store
from circle_restriction.errors import InvalidInputError
from circle_restriction.replab.models import Settings
from circle_restriction.seqtab.models import SequenceCache, set_sequence_cache

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

ENV_PREFIX = "CIRCLE_RESTRICTION_"

# Active settings instance
_settings: Optional[Settings] = None


def settings_from_environment() -> Dict[str, str]:
    """Field values found in ``CIRCLE_RESTRICTION_<FIELD>`` variables."""
    found = {}
    for name in Settings.model_fields:
        value = os.getenv(ENV_PREFIX + name.upper())
        if value:
            found[name] = value
    return found


def settings_from_file(path: Path) -> Dict[str, Any]:
    """
    Field values from a JSON object file.

    Raises:
        InvalidInputError: Unreadable file, not a JSON object, or unknown keys
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInputError(f"cannot read config file {path}: {e}") from e
    if not isinstance(data, dict):
        raise InvalidInputError(f"config file {path} must hold a JSON object")
    unknown = sorted(set(data) - set(Settings.model_fields))
    if unknown:
        raise InvalidInputError(f"unknown settings in {path}: {unknown}")
    return data


def load_settings(
    config_path: Optional[Path] = None, overrides: Optional[Mapping[str, Any]] = None
) -> Settings:
    """
    Merge all sources into one Settings.

    Args:
        config_path: Optional JSON config file
        overrides: Command-line values; ``None`` entries are ignored

    Raises:
        InvalidInputError: Bad config file or a value rejected by validation
    """
    merged: Dict[str, Any] = settings_from_environment()
    if config_path is not None:
        merged.update(settings_from_file(config_path))
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        settings = Settings(**merged)
    except ValidationError as e:
        raise InvalidInputError(f"invalid settings: {e}") from e
    logger.debug(f"settings {settings.digest()}: {settings.model_dump()}")
    return settings


def apply_settings(settings: Settings) -> Settings:
    """
    Make ``settings`` the active one.

    Points the integral store at ``cache_path`` when given and starts a fresh
    sequence cache if the quadrature settings changed.
    """
    global _settings

    if settings.cache_path is not None:
        set_integral_store(IntegralStore(settings.cache_path))
    if _settings is None or _settings.quad_config() != settings.quad_config():
        set_sequence_cache(SequenceCache(cfg=settings.quad_config()))
    _settings = settings
    return settings


def get_settings() -> Settings:
    """
    Get the active settings.

    Raises:
        RuntimeError: If no settings were applied yet
    """
    if _settings is None:
        raise RuntimeError(
            "Settings not configured. "
            "Call apply_settings(load_settings(...)) before running commands."
        )
    return _settings


def reset_settings() -> None:
    """Forget the active settings (for tests)."""
    global _settings
    _settings = None
