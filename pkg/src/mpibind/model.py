"""In-memory API database: functions, parameters, blocks and kind-map tables."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional

DIRECTIONS = ("in", "out", "inout")
STANDARD = "standard"
CUSTOM = "custom"

IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
KIND_RE = re.compile(r"^[A-Z][A-Z0-9_]*$")


class BindingError(Exception):
    """Base class for every error raised by the generator."""


class UnknownTable(BindingError):
    pass


class UnknownKind(BindingError):
    def __init__(self, kind, table, context=""):
        self.kind = kind
        self.table = table
        msg = f"kind {kind} not defined in {table} or its base tables"
        if context:
            msg = f"{context}: {msg}"
        super().__init__(msg)


@dataclass(frozen=True)
class SourceLocation:
    file: str
    line: int

    def __str__(self):
        return f"{self.file}:{self.line}"


@dataclass(frozen=True)
class ParameterSpec:
    name: str
    kind: str
    constant: bool = False
    pointer_hint: Optional[bool] = None
    direction: str = "in"
    length_expr: Optional[str] = None
    description: Optional[str] = None

    def __post_init__(self):
        if not IDENT_RE.match(self.name):
            raise ValueError(f"bad parameter name {self.name!r}")
        if not KIND_RE.match(self.kind):
            raise ValueError(f"bad kind {self.kind!r} for parameter {self.name}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"bad direction {self.direction!r}")


@dataclass(frozen=True)
class Block:
    """A verbatim comment (``/* -- name --``) or code (``{ -- name --``) block."""

    flavor: str  # "comment" | "code"
    body: str
    indent: str = ""

    def render(self, name):
        if self.flavor == "comment":
            return f"{self.indent}/* -- {name} --\n{self.body}{self.indent}*/\n"
        return f"{self.indent}{{ -- {name} --\n{self.body}{self.indent}}}\n"


@dataclass(frozen=True)
class FunctionSpec:
    name: str
    parameters: tuple = ()
    attributes: dict = field(default_factory=dict)
    blocks: dict = field(default_factory=dict)
    origin: str = STANDARD
    location: Optional[SourceLocation] = field(default=None, compare=False)

    def __post_init__(self):
        names = [p.name for p in self.parameters]
        if len(set(names)) != len(names):
            raise ValueError(f"{self.name}: duplicate parameter names")
        for key in self.attributes:
            if not key.startswith("."):
                raise ValueError(f"{self.name}: attribute {key!r} must start with '.'")

    def param(self, name):
        for p in self.parameters:
            if p.name == name:
                return p
        return None


class ApiRegistry:
    """Ordered name -> FunctionSpec map; iteration follows insertion order."""

    def __init__(self, functions=()):
        self._functions = {}
        for fn in functions:
            self.insert(fn)

    def insert(self, fn):
        # dict assignment keeps the original position on replacement
        self._functions[fn.name] = fn
        return self

    def __contains__(self, name):
        return name in self._functions

    def __getitem__(self, name):
        return self._functions[name]

    def get(self, name, default=None):
        return self._functions.get(name, default)

    def __iter__(self) -> Iterator[FunctionSpec]:
        return iter(self._functions.values())

    def __len__(self):
        return len(self._functions)

    def names(self):
        return list(self._functions)

    def __eq__(self, other):
        if not isinstance(other, ApiRegistry):
            return NotImplemented
        return list(self._functions.items()) == list(other._functions.items())

    def __repr__(self):
        return f"ApiRegistry({self.names()!r})"


def registry_insert(registry, fn):
    return registry.insert(fn)


class KindMapSet:
    """Named kind -> type-text tables with single inheritance through ``.base``."""

    def __init__(self, tables=None, bases=None, lines=None):
        self.tables = dict(tables or {})
        self.bases = dict(bases or {})
        self.lines = dict(lines or {})  # table -> header line, for diagnostics

    def __contains__(self, table):
        return table in self.tables

    def chain(self, table):
        if table not in self.tables:
            raise UnknownTable(f"no kind-map table named {table}")
        seen = []
        cur = table
        while cur is not None:
            if cur in seen:
                raise BindingError(f"base cycle through {' -> '.join(seen + [cur])}")
            if cur not in self.tables:
                raise UnknownTable(f"{seen[-1]}.base names missing table {cur}")
            seen.append(cur)
            cur = self.bases.get(cur)
        return seen

    def lookup(self, table, kind):
        for t in self.chain(table):
            if kind in self.tables[t]:
                return self.tables[t][kind]
        raise UnknownKind(kind, table)

    def get(self, table, kind, default=None):
        try:
            return self.lookup(table, kind)
        except (UnknownKind, UnknownTable):
            return default

    def flattened(self, table):
        out = {}
        for t in reversed(self.chain(table)):
            out.update(self.tables[t])
        return out

    def kinds(self, tables=None):
        names = self.tables if tables is None else tables
        return {k for t in names for k in self.tables[t]}

    def __eq__(self, other):
        if not isinstance(other, KindMapSet):
            return NotImplemented
        return self.tables == other.tables and self.bases == other.bases


def kindmap_lookup(maps, table, kind):
    return maps.lookup(table, kind)
