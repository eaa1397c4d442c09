"""Configuration module for featsel.

This module exposes the settings object for centralized configuration access.
"""

from featsel.core.config.settings import settings

__all__ = ["settings"]
