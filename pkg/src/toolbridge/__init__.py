"""Tool-mediated language agents for SQLite databases and in-memory knowledge bases."""

__version__ = "0.1.0"

from .actions import Action, ActionParseError, FinalAnswer, parse_action

__all__ = ["Action", "ActionParseError", "FinalAnswer", "parse_action", "__version__"]
