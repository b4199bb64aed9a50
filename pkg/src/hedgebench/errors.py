"""Error types shared across the package.

Both derive from ValueError so callers that don't care about the distinction
can catch one thing; the CLI maps ConfigError to exit code 2 and everything
else to exit code 1.
"""


class ConfigError(ValueError):
    """A structurally invalid configuration or call (wrong sizes, bad ranges)."""


class InputError(ValueError):
    """Malformed runtime data, e.g. non-finite losses."""
