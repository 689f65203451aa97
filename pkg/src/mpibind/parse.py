"""Readers and writers for the API text format, kind-map tables and JSON export.

The text format is line oriented::

    # comment
    MPI_Send:
        .desc: Performs a blocking send
        buf: BUFFER, constant=True,
            [initial address of send buffer]
        dest: RANK, [rank of destination]
    /* -- notes-1 --
    ...
    */
    { -- body_of_routine --
    ...
    }

See docs/formats.md for the full grammar.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .model import (
    CUSTOM,
    DIRECTIONS,
    IDENT_RE,
    KIND_RE,
    STANDARD,
    ApiRegistry,
    BindingError,
    Block,
    FunctionSpec,
    KindMapSet,
    ParameterSpec,
    SourceLocation,
)
from .overlay import OverlayConfig, OverlayEntry, ParameterOverride

HEADER_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:\s*$")
BLOCK_OPEN_RE = re.compile(r"^([ \t]*)(/\*|\{) -- ([A-Za-z0-9_.\-]+) --[ \t]*$")
DIRECTIVE_RE = re.compile(r"^\.([A-Za-z0-9_\-]+)\s*:(.*)$")
PARAM_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")
MAP_ENTRY_RE = re.compile(r"^(\.?[A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")

FLAGS = ("constant", "pointer", "direction", "length")
BOOLS = {"true": True, "false": False}


@dataclass(frozen=True)
class ParseDiagnostic:
    location: SourceLocation
    severity: str  # "error" | "warning"
    message: str

    def __str__(self):
        return f"{self.location}: {self.severity}: {self.message}"


class ParseError(BindingError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


class SchemaError(BindingError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


# ---- shared function/parameter grammar -------------------------------------


@dataclass
class _RawParam:
    name: str
    kind: object
    flags: dict
    description: object
    location: SourceLocation


@dataclass
class _RawEntry:
    name: str
    location: SourceLocation
    params: list = field(default_factory=list)
    attributes: dict = field(default_factory=dict)
    blocks: dict = field(default_factory=dict)


def _strip_comment(line):
    depth = 0
    for i, ch in enumerate(line):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth = max(depth - 1, 0)
        elif ch == "#" and depth == 0:
            return line[:i]
    return line


def _split_items(text):
    """Split flag text on commas at bracket/paren depth zero."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur).strip())
    return [i for i in items if i]


def _scan_bracket(text, depth):
    """Consume description text; return (inner_text, remaining_depth, tail)."""
    out = []
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
            if depth == 1:
                continue
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return "".join(out), 0, text[i + 1:]
        out.append(ch)
    return "".join(out), depth, ""


class _EntryParser:
    def __init__(self, text, path, require_kind):
        self.path = path
        self.require_kind = require_kind
        self.diags = []
        self.entries = []
        self._parse(text)

    def error(self, line, msg):
        self.diags.append(ParseDiagnostic(SourceLocation(self.path, line), "error", msg))

    def _parse(self, text):
        cur = None  # current _RawEntry
        param = None  # parameter receiving description continuations
        desc_parts, desc_depth, desc_line = [], 0, 0
        block = None  # (name, flavor, indent, closer, body_lines, line)

        for lineno, raw in enumerate(text.splitlines(keepends=True), start=1):
            bare = raw.rstrip("\r\n")
            if block is not None:
                name, flavor, indent, closer, body, start = block
                if bare == indent + closer:
                    if cur is not None:
                        cur.blocks[name] = Block(flavor, "".join(body), indent)
                    block = None
                else:
                    body.append(raw)
                continue

            if desc_depth:
                chunk, desc_depth, tail = _scan_bracket(bare, desc_depth)
                desc_parts.append(chunk.strip())
                if not desc_depth:
                    param.description = " ".join(p for p in desc_parts if p)
                    if tail.strip(" ,\t"):
                        self.error(lineno, f"unexpected text after description: {tail.strip()!r}")
                continue

            m = BLOCK_OPEN_RE.match(bare)
            if m:
                indent, opener, name = m.groups()
                flavor = "comment" if opener == "/*" else "code"
                if cur is None:
                    self.error(lineno, f"block {name} outside a function")
                elif name in cur.blocks:
                    self.error(lineno, f"{cur.name}: duplicate block {name}")
                # an orphan block is still consumed so its body is not misparsed
                block = (name, flavor, indent, "*/" if flavor == "comment" else "}", [], lineno)
                param = None
                continue

            line = _strip_comment(bare).rstrip()
            if not line.strip():
                continue

            if not line[0].isspace():
                m = HEADER_RE.match(line)
                if not m:
                    self.error(lineno, f"expected 'NAME:' at column 0, got {line.strip()!r}")
                    cur, param = None, None
                    continue
                cur = _RawEntry(m.group(1), SourceLocation(self.path, lineno))
                self.entries.append(cur)
                param = None
                continue

            body = line.strip()
            if cur is None:
                what = "directive" if body.startswith(".") else "parameter line"
                self.error(lineno, f"{what} outside a function")
                continue

            if body.startswith("."):
                m = DIRECTIVE_RE.match(body)
                if not m:
                    self.error(lineno, f"malformed directive {body!r}")
                    continue
                cur.attributes["." + m.group(1)] = m.group(2).strip()
                param = None
                continue

            if body.startswith("["):
                if param is None or param.description is not None:
                    self.error(lineno, "description continuation without a parameter")
                    continue
                chunk, desc_depth, tail = _scan_bracket(body, 0)
                if desc_depth:
                    desc_parts, desc_line = [chunk.strip()], lineno
                else:
                    param.description = chunk.strip()
                    if tail.strip(" ,\t"):
                        self.error(lineno, f"unexpected text after description: {tail.strip()!r}")
                continue

            m = PARAM_RE.match(body)
            if not m:
                self.error(lineno, f"cannot parse line {body!r}")
                continue
            param = self._param(m.group(1), m.group(2), lineno, cur)
            if param is None:
                continue
            cur.params.append(param)
            rest = m.group(2)
            pos = self._desc_start(rest)
            if pos >= 0:
                chunk, desc_depth, tail = _scan_bracket(rest[pos:], 0)
                if desc_depth:
                    desc_parts, desc_line = [chunk.strip()], lineno
                else:
                    param.description = chunk.strip()
                    if tail.strip(" ,\t"):
                        self.error(lineno, f"unexpected text after description: {tail.strip()!r}")

        if block is not None:
            self.error(block[5], f"unterminated block {block[0]}")
        if desc_depth:
            self.error(desc_line, "unterminated bracket in description")

    @staticmethod
    def _desc_start(text):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "[" and depth == 0:
                return i
        return -1

    def _param(self, name, rest, lineno, entry):
        pos = self._desc_start(rest)
        flag_text = rest if pos < 0 else rest[:pos]
        items = _split_items(flag_text)
        kind = None
        flags = {}
        ok = True
        for idx, item in enumerate(items):
            if "=" not in item:
                if idx == 0 and KIND_RE.match(item):
                    kind = item
                elif idx == 0:
                    self.error(lineno, f"{name}: bad kind {item!r}")
                    ok = False
                else:
                    self.error(lineno, f"{name}: unknown flag {item!r}")
                    ok = False
                continue
            key, value = (s.strip() for s in item.split("=", 1))
            if key not in FLAGS:
                self.error(lineno, f"{name}: unknown flag {key!r}")
                ok = False
            elif key in flags:
                self.error(lineno, f"{name}: flag {key} given twice")
                ok = False
            elif key in ("constant", "pointer"):
                if value.lower() not in BOOLS:
                    self.error(lineno, f"{name}: {key} must be True or False")
                    ok = False
                else:
                    flags[key] = BOOLS[value.lower()]
            elif key == "direction":
                if value not in DIRECTIONS:
                    self.error(lineno, f"{name}: direction must be in, out or inout")
                    ok = False
                else:
                    flags[key] = value
            else:
                if not value:
                    self.error(lineno, f"{name}: empty length expression")
                    ok = False
                flags[key] = value
        if kind is None and self.require_kind and ok:
            self.error(lineno, f"{name}: missing kind")
            ok = False
        if any(p.name == name for p in entry.params):
            self.error(lineno, f"{entry.name}: duplicate parameter {name}")
            ok = False
        if not ok:
            return None
        return _RawParam(name, kind, flags, None, SourceLocation(self.path, lineno))

    def raise_errors(self):
        errors = [d for d in self.diags if d.severity == "error"]
        if errors:
            raise ParseError(errors)


def _to_parameter(rp):
    return ParameterSpec(
        name=rp.name,
        kind=rp.kind,
        constant=rp.flags.get("constant", False),
        pointer_hint=rp.flags.get("pointer"),
        direction=rp.flags.get("direction", "in"),
        length_expr=rp.flags.get("length"),
        description=rp.description,
    )


def parse_standard_api(text, path="<standard>"):
    """Parse a transcribed standard API file into an ``ApiRegistry``."""
    p = _EntryParser(text, path, require_kind=True)
    registry = ApiRegistry()
    for e in p.entries:
        if e.name in registry:
            p.error(e.location.line, f"duplicate function {e.name}")
            continue
        attrs = dict(e.attributes)
        origin = attrs.pop(".origin", STANDARD)
        if origin not in (STANDARD, CUSTOM):
            p.error(e.location.line, f"{e.name}: .origin must be standard or custom")
            origin = STANDARD
        registry.insert(FunctionSpec(
            name=e.name,
            parameters=tuple(_to_parameter(rp) for rp in e.params),
            attributes=attrs,
            blocks=dict(e.blocks),
            origin=origin,
            location=e.location,
        ))
    p.raise_errors()
    return registry


def parse_custom_config(text, path="<custom>"):
    """Parse an overlay file. Entries keep file order; repeats are allowed."""
    p = _EntryParser(text, path, require_kind=False)
    entries = []
    for e in p.entries:
        if ".origin" in e.attributes:
            p.error(e.location.line, ".origin is reserved for merged dumps")
        params = tuple(
            ParameterOverride(
                name=rp.name,
                kind=rp.kind,
                constant=rp.flags.get("constant"),
                pointer_hint=rp.flags.get("pointer"),
                direction=rp.flags.get("direction"),
                length_expr=rp.flags.get("length"),
                description=rp.description,
                location=rp.location,
            )
            for rp in e.params
        )
        entries.append(OverlayEntry(
            name=e.name,
            attributes=dict(e.attributes),
            parameters=params,
            blocks=dict(e.blocks),
            location=e.location,
        ))
    p.raise_errors()
    return OverlayConfig(entries=tuple(entries), source=path)


# ---- serialization ----------------------------------------------------------


def format_parameter(p):
    items = [p.kind]
    if p.constant:
        items.append("constant=True")
    if p.pointer_hint is not None:
        items.append(f"pointer={p.pointer_hint}")
    if p.direction != "in":
        items.append(f"direction={p.direction}")
    if p.length_expr is not None:
        items.append(f"length={p.length_expr}")
    line = f"{p.name}: " + ", ".join(items)
    if p.description is not None:
        line += f", [{p.description}]"
    return line


def serialize_function(fn, indent="    "):
    lines = [f"{fn.name}:"]
    if fn.origin != STANDARD:
        lines.append(f"{indent}.origin: {fn.origin}")
    for key, value in fn.attributes.items():
        lines.append(f"{indent}{key}: {value}".rstrip())
    for p in fn.parameters:
        lines.append(indent + format_parameter(p))
    text = "\n".join(lines) + "\n"
    for name, blk in fn.blocks.items():
        text += blk.render(name)
    return text


def serialize_registry(registry):
    return "\n".join(serialize_function(fn) for fn in registry)


# ---- kind maps --------------------------------------------------------------


def parse_kind_maps(text, path="<kind-map>"):
    diags = []
    tables, bases, base_lines, table_lines = {}, {}, {}, {}
    cur = None

    def error(line, msg):
        diags.append(ParseDiagnostic(SourceLocation(path, line), "error", msg))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if not line[0].isspace():
            m = HEADER_RE.match(line)
            if not m:
                error(lineno, f"expected 'TABLE:' at column 0, got {line.strip()!r}")
                cur = None
                continue
            cur = m.group(1)
            if cur in tables:
                error(lineno, f"duplicate table {cur}")
            tables.setdefault(cur, {})
            table_lines.setdefault(cur, lineno)
            continue
        if cur is None:
            error(lineno, "map entry outside a table")
            continue
        m = MAP_ENTRY_RE.match(line.strip())
        if not m:
            error(lineno, f"cannot parse map entry {line.strip()!r}")
            continue
        key, value = m.group(1), m.group(2).strip()
        if not value:
            error(lineno, f"{cur}.{key}: missing value")
            continue
        if key == ".base":
            if cur in bases:
                error(lineno, f"{cur}: .base given twice")
            bases[cur] = value
            base_lines[cur] = lineno
        elif key.startswith("."):
            error(lineno, f"{cur}: unknown directive {key}")
        elif key in tables[cur]:
            error(lineno, f"{cur}: duplicate key {key}")
        else:
            tables[cur][key] = value

    for t, b in bases.items():
        if b not in tables:
            error(base_lines[t], f"{t}.base names missing table {b}")
    for t in bases:
        seen, cur = [], t
        while cur in bases and cur in tables:
            if cur in seen:
                if cur == t:
                    error(base_lines[t], f"base cycle: {' -> '.join(seen + [cur])}")
                break
            seen.append(cur)
            cur = bases[cur]
    if diags:
        raise ParseError(diags)
    return KindMapSet(tables, bases, table_lines)


def serialize_kind_maps(maps):
    out = []
    for name, table in maps.tables.items():
        out.append(f"{name}:")
        if name in maps.bases:
            out.append(f"    .base: {maps.bases[name]}")
        out.extend(f"    {k}: {v}" for k, v in table.items())
    return "\n".join(out) + "\n"


# ---- JSON export ------------------------------------------------------------


def _no_dupes(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise SchemaError(k, "duplicate key")
        out[k] = v
    return out


def parse_json_export(text, path="<json>"):
    """Load the JSON export: ``{name: {parameters: [...], attributes: {...}}}``."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_dupes)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}:{exc.lineno}", f"invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SchemaError("$", "top level must be an object keyed by function name")

    registry = ApiRegistry()
    for name, body in doc.items():
        where = f"$.{name}"
        if not IDENT_RE.match(name):
            raise SchemaError(where, "function name is not an identifier")
        if not isinstance(body, dict):
            raise SchemaError(where, "function entry must be an object")
        unknown = set(body) - {"parameters", "attributes", "blocks", "origin"}
        if unknown:
            raise SchemaError(where, f"unknown fields {sorted(unknown)}")
        params = []
        for i, pj in enumerate(_typed(body.get("parameters", []), list, f"{where}.parameters")):
            params.append(_json_param(pj, f"{where}.parameters[{i}]"))
        attrs = _typed(body.get("attributes", {}), dict, f"{where}.attributes")
        for k, v in attrs.items():
            if not k.startswith(".") or not isinstance(v, str):
                raise SchemaError(f"{where}.attributes.{k}", "keys start with '.', values are strings")
        blocks = {}
        for bname, bj in _typed(body.get("blocks", {}), dict, f"{where}.blocks").items():
            bwhere = f"{where}.blocks.{bname}"
            bj = _typed(bj, dict, bwhere)
            if bj.get("flavor") not in ("comment", "code") or not isinstance(bj.get("body"), str):
                raise SchemaError(bwhere, "needs flavor comment|code and a string body")
            blocks[bname] = Block(bj["flavor"], bj["body"], bj.get("indent", ""))
        origin = body.get("origin", STANDARD)
        if origin not in (STANDARD, CUSTOM):
            raise SchemaError(f"{where}.origin", "must be standard or custom")
        try:
            fn = FunctionSpec(name, tuple(params), dict(attrs), blocks, origin)
        except ValueError as exc:
            raise SchemaError(where, str(exc)) from None
        registry.insert(fn)
    return registry


def _typed(value, typ, where):
    if not isinstance(value, typ):
        raise SchemaError(where, f"expected {typ.__name__}")
    return value


def _json_param(pj, where):
    pj = _typed(pj, dict, where)
    for req in ("name", "kind"):
        if req not in pj:
            raise SchemaError(where, f"missing required field {req!r}")
    unknown = set(pj) - {"name", "kind", "constant", "pointer", "direction", "length", "desc"}
    if unknown:
        raise SchemaError(where, f"unknown fields {sorted(unknown)}")
    for key in ("constant", "pointer"):
        if key in pj and not isinstance(pj[key], bool):
            raise SchemaError(f"{where}.{key}", "expected boolean")
    try:
        return ParameterSpec(
            name=pj["name"],
            kind=pj["kind"],
            constant=pj.get("constant", False),
            pointer_hint=pj.get("pointer"),
            direction=pj.get("direction", "in"),
            length_expr=pj.get("length"),
            description=pj.get("desc"),
        )
    except (ValueError, TypeError) as exc:
        raise SchemaError(where, str(exc)) from None


def registry_to_json(registry):
    doc = {}
    for fn in registry:
        params = []
        for p in fn.parameters:
            pj = {"name": p.name, "kind": p.kind}
            if p.constant:
                pj["constant"] = True
            if p.pointer_hint is not None:
                pj["pointer"] = p.pointer_hint
            if p.direction != "in":
                pj["direction"] = p.direction
            if p.length_expr is not None:
                pj["length"] = p.length_expr
            if p.description is not None:
                pj["desc"] = p.description
            params.append(pj)
        entry = {"parameters": params, "attributes": dict(fn.attributes)}
        if fn.blocks:
            entry["blocks"] = {
                n: {"flavor": b.flavor, "body": b.body, "indent": b.indent}
                for n, b in fn.blocks.items()
            }
        if fn.origin != STANDARD:
            entry["origin"] = fn.origin
        doc[fn.name] = entry
    return json.dumps(doc, indent=2) + "\n"


def load_api_file(path, fmt=None):
    """Read a standard API source, choosing text or JSON by extension unless forced."""
    path = str(path)
    with open(path, encoding="utf-8") as f:
        text = f.read()
    fmt = fmt or ("json" if path.endswith(".json") else "text")
    if fmt == "json":
        return parse_json_export(text, path)
    return parse_standard_api(text, path)
