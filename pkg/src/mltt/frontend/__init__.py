from .diagnostics import Diagnostic, FrontendError, Span
from .parser import Definition, SurfaceTerm, parse, parse_file, parse_term
from .printer import print_term
from .resolve import resolve

__all__ = [
    "Definition", "Diagnostic", "FrontendError", "Span", "SurfaceTerm",
    "parse", "parse_file", "parse_term", "print_term", "resolve",
]
