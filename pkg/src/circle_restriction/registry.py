"""
Command registration system.

Provides decorator-based registration for verification suites and CLI
commands, grouped by name.
"""

import functools
from typing import Any, Callable, Dict

_registry: Dict[str, Dict[str, Callable]] = {}


def register_command(group: str, name: str):
    """
    Decorator to register a command under a group.

    Enforces that the command returns a CommandResponse object.

    Args:
        group: Group name (e.g., "verify")
        name: Command name (e.g., "crux", "tables")

    Returns:
        Decorated function registered in the global registry

    Example:
        @register_command("verify", "crux")
        def verify_crux(settings: Settings, seeds: int) -> CommandResponse:
            return CommandResponse(is_success=True, result=report)

    Raises:
        TypeError: If the function returns a non-CommandResponse object
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            result = func(*args, **kwargs)

            if not _is_command_response(result):
                raise TypeError(
                    f"Command '{group}.{name}' must return CommandResponse, "
                    f"got {type(result).__name__}. "
                    f"Import: from circle_restriction.model import CommandResponse"
                )

            return result

        _registry.setdefault(group, {})[name] = wrapper
        return wrapper

    return decorator


def _is_command_response(obj: Any) -> bool:
    """
    Check if an object is a CommandResponse.

    Uses duck typing to avoid circular imports.
    """
    return (
        hasattr(obj, "is_success") and hasattr(obj, "result") and hasattr(obj, "error")
    )


def get_registry() -> Dict[str, Dict[str, Callable]]:
    """
    Get the current command registry.

    Returns:
        Dictionary mapping group names to command dictionaries
        Structure: {group_name: {command_name: command_function}}
    """
    return {group: commands.copy() for group, commands in _registry.items()}


def get_command(group: str, name: str) -> Callable | None:
    """Get a specific command function from the registry, or None."""
    return _registry.get(group, {}).get(name)


def get_group_commands(group: str) -> Dict[str, Callable]:
    """Get all commands registered under a group."""
    return _registry.get(group, {}).copy()


def list_groups() -> list[str]:
    """List all registered groups."""
    return list(_registry.keys())
