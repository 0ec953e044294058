"""Command language front end: parser, session execution and output rendering."""

from .emit import emit
from .main import main, run_text
from .parser import Command, parse, parse_one
from .session import CliError, Output, Session, describe, execute, execute_text

__all__ = ["Command", "CliError", "Output", "Session", "describe", "emit", "execute", "execute_text",
           "main", "parse", "parse_one", "run_text"]
