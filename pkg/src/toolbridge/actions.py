"""Action surface shared by both environments.

Tool calls are written as ``tool_name(arg1, arg2)``: arguments are either bare
tokens (no whitespace, commas, parentheses or quotes) or double-quoted strings
where ``\\"`` is the only escape. There is no nesting. The same grammar is used
in model output, candidate lists, and trace files, so parse/render must round
trip exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

# Fixed sentence appended to every error observation before the model retries.
RETRY_PROMPT = "Please fix the error and try again."

_BARE_TOKEN_RE = re.compile(r'^[^\s",()]+$')
_CALL_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*\((.*)\)$", re.DOTALL)


class ActionParseError(ValueError):
    """Model output that does not fit the tool-call grammar."""


@dataclass(frozen=True)
class Action:
    """A single tool call: tool name plus positional argument tokens (unquoted)."""

    name: str
    args: tuple[str, ...]

    def render(self) -> str:
        return f"{self.name}({', '.join(quote_arg(a) for a in self.args)})"


@dataclass(frozen=True)
class FinalAnswer:
    """Terminal marker parsed from a ``Final Answer:`` line."""

    payload: str


def quote_arg(arg: str) -> str:
    """Render one argument: bare when the token grammar allows it, quoted otherwise."""
    if _BARE_TOKEN_RE.match(arg):
        return arg
    return '"' + arg.replace('"', '\\"') + '"'


def parse_action(text: str) -> Action:
    """Parse one ``tool_name(arg1, arg2)`` call."""
    s = text.strip()
    m = _CALL_RE.match(s)
    if not m:
        raise ActionParseError(f"not a tool call of the form tool_name(arg1, arg2): {s!r}")
    name, body = m.group(1), m.group(2)
    return Action(name, tuple(_parse_args(body)))


def _parse_args(body: str) -> list[str]:
    if not body.strip():
        return []
    return [_interpret_arg(raw) for raw in _split_top_level(body)]


def _split_top_level(body: str) -> list[str]:
    parts = []
    start = 0
    in_quotes = False
    i = 0
    while i < len(body):
        ch = body[i]
        if in_quotes:
            if ch == "\\":
                i += 2
                continue
            if ch == '"':
                in_quotes = False
        elif ch == '"':
            in_quotes = True
        elif ch == ",":
            parts.append(body[start:i])
            start = i + 1
        i += 1
    if in_quotes:
        raise ActionParseError(f"unterminated quoted argument in: {body!r}")
    parts.append(body[start:])
    return parts


def _interpret_arg(raw: str) -> str:
    s = raw.strip()
    if not s:
        raise ActionParseError(f"empty argument in: {raw!r}")
    if s.startswith('"'):
        return _unquote(s)
    if not _BARE_TOKEN_RE.match(s):
        raise ActionParseError(
            f"argument {s!r} must be a bare token (no spaces, commas, parentheses "
            "or quotes) or a double-quoted string"
        )
    return s


def _unquote(s: str) -> str:
    out: list[str] = []
    i = 1
    while i < len(s):
        ch = s[i]
        if ch == "\\" and i + 1 < len(s) and s[i + 1] == '"':
            out.append('"')
            i += 2
            continue
        if ch == '"':
            if i != len(s) - 1:
                raise ActionParseError(f"content after closing quote in: {s!r}")
            return "".join(out)
        out.append(ch)
        i += 1
    raise ActionParseError(f"unterminated quoted argument: {s!r}")


@dataclass(frozen=True)
class ToolSpec:
    """One tool's card: the signature and description shown to the model, plus
    the names of tools that must have been used beforehand."""

    name: str
    signature: str
    description: str
    prerequisites: tuple[str, ...] = ()


def render_tool_docs(specs: Sequence[ToolSpec]) -> str:
    """Render tool cards as one block of text.

    This exact text is embedded in prompts and printed by the CLI, so it is the
    single source of truth for what the model is told about each tool.
    """
    cards = []
    for spec in specs:
        prereq = ", ".join(spec.prerequisites) if spec.prerequisites else "n/a"
        cards.append(f"{spec.signature}\n{spec.description}\nPrerequisite: {prereq}")
    return "\n\n".join(cards)


def prerequisite_graph(specs: Sequence[ToolSpec]) -> dict[str, tuple[str, ...]]:
    return {spec.name: spec.prerequisites for spec in specs}
