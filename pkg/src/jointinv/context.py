"""Variable contexts: the ordered coordinate and parameter names of a computation.

The declared order is significant: it fixes the monomial order (graded lex,
variables first, then parameters) and the column order of every coefficient
matrix built on top of the context.
"""

from __future__ import annotations

import re

from .errors import ContextMismatchError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_]*[0-9]*\Z")


class VarContext:
    """Immutable list of differentiated variables plus symbolic parameters.

    Parameters take part in arithmetic like any indeterminate but are never
    differentiated and never act as vector-field coordinates.
    """

    __slots__ = ("variables", "parameters", "names", "_index")

    def __init__(self, variables, parameters=()):
        variables = tuple(variables)
        parameters = tuple(parameters)
        if not variables:
            raise ValueError("a context needs at least one variable")
        names = variables + parameters
        seen = set()
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate name {name!r}")
            seen.add(name)
        self.variables = variables
        self.parameters = parameters
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown name {name!r}") from None

    def is_variable(self, name):
        return name in self._index and self._index[name] < len(self.variables)

    def is_parameter(self, name):
        return name in self._index and self._index[name] >= len(self.variables)

    def require_same(self, other):
        if self != other:
            raise ContextMismatchError(
                f"context mismatch: {self.names} vs {other.names}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, VarContext)
            and self.variables == other.variables
            and self.parameters == other.parameters
        )

    def __hash__(self):
        return hash((self.variables, self.parameters))

    def __repr__(self):
        if self.parameters:
            return f"VarContext({list(self.variables)}, params={list(self.parameters)})"
        return f"VarContext({list(self.variables)})"
