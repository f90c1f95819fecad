"""
Logfire setup for the CLI.

Verification suites and CLI commands open ``logfire.span`` blocks whether or
not Logfire is configured; unconfigured spans are no-ops. Configuring it
once here sends them to Logfire when a token is present.
"""

import logging
import os

import logfire

logger = logging.getLogger(__name__)

SERVICE_NAME = "circle-restriction"

# Set once configure_logfire succeeds
_logfire_initialized = False


def configure_logfire(
    send_to_logfire: str | bool = "if-token-present",
    enable: bool = True,
    console: bool = False,
    record_validation_failures: bool = True,
) -> bool:
    """
    Configure Logfire once per process.

    Args:
        send_to_logfire: "if-token-present", True or False
        enable: False skips configuration entirely
        console: Also print spans to the console
        record_validation_failures: Record rejected Settings/QuadConfig
            values through Logfire's pydantic instrumentation

    Returns:
        True if Logfire is configured, False otherwise

    Environment Variables:
        LOGFIRE_TOKEN: Logfire authentication token (optional)
        ENABLE_LOGFIRE: Set to "false" to disable Logfire
    """
    global _logfire_initialized

    if _logfire_initialized:
        logger.debug("Logfire already initialized, skipping")
        return True

    if not enable or os.getenv("ENABLE_LOGFIRE", "true").lower() == "false":
        logger.debug("Logfire disabled by configuration")
        return False

    try:
        logfire.configure(
            service_name=SERVICE_NAME,
            send_to_logfire=send_to_logfire,
            console=None if console else False,
        )
        if record_validation_failures:
            logfire.instrument_pydantic(record="failure")
        _logfire_initialized = True
        logger.info(f"Logfire configured for {SERVICE_NAME} (send_to_logfire={send_to_logfire})")
        return True

    except Exception as e:
        logger.warning(f"Failed to configure Logfire: {e}")
        return False


def is_logfire_enabled() -> bool:
    return _logfire_initialized
