"""Kind resolution: concrete types per language/size, pointer-ness, validation rules."""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from typing import Optional

from .model import BindingError, SourceLocation, UnknownKind

LANGUAGES = ("c", "f08")
SIZES = ("small", "big")

RULE_IDS = (
    "comm_valid",
    "datatype_valid_committed",
    "rank_send",
    "rank_recv",
    "rank_plain",
    "tag_valid",
    "count_nonnegative",
    "buffer_addr",
    "request_valid",
    "none",
)

INTERNAL_TABLE = "INTERNAL_C_TYPE_MAP"
INTERNAL_COUNT = "INTERNAL_COUNT"
DEFAULT_INTERNAL_COUNT = "MPI_Aint"


@dataclass(frozen=True)
class EmitVariant:
    language: str
    size: str
    namespace_prefix: str = "MPI_"
    suffix: str = ""

    def __post_init__(self):
        if self.language not in LANGUAGES or self.size not in SIZES:
            raise ValueError(f"bad variant {self.language}/{self.size}")
        if self.language == "c" and self.suffix != ("_c" if self.size == "big" else ""):
            raise ValueError("C big variants carry the _c suffix, small ones none")
        if self.language == "f08" and self.suffix:
            raise ValueError("f08 variants are overloaded by generic interface, not renamed")

    @classmethod
    def make(cls, language, size, prefix="MPI_"):
        suffix = "_c" if (language == "c" and size == "big") else ""
        return cls(language, size, prefix, suffix)

    @property
    def table(self):
        return f"{self.size.upper()}_{self.language.upper()}_KIND_MAP"


@dataclass(frozen=True)
class Conversion:
    action: str  # "narrow" | "handle"
    internal_type: str
    local_name: str


@dataclass(frozen=True)
class ResolvedParameter:
    source: object
    type_text: str
    is_pointer: bool
    needs_conversion: Optional[Conversion] = None

    @property
    def name(self):
        return self.source.name


@dataclass(frozen=True)
class ValidationRule:
    parameter: str
    rule_id: str
    emitted_guard: str


def is_poly(kind):
    return kind.startswith("POLY")


def function_has_poly(fn):
    return any(is_poly(p.kind) for p in fn.parameters)


def is_pointer(p):
    """Declarative pointer rule; an explicit ``pointer=`` flag always wins."""
    if p.pointer_hint is not None:
        return p.pointer_hint
    if p.kind == "BUFFER":
        return True
    if p.direction in ("out", "inout"):
        return True
    return p.length_expr is not None


def resolve_parameter(p, variant, maps, fn_name=""):
    try:
        type_text = maps.lookup(variant.table, p.kind)
    except UnknownKind as exc:
        ctx = f"{fn_name}.{p.name}" if fn_name else p.name
        raise UnknownKind(p.kind, variant.table, ctx) from exc
    pointer = is_pointer(p)
    conv = None
    if variant.language == "c" and not pointer:
        if variant.size == "big" and is_poly(p.kind):
            internal = maps.get(INTERNAL_TABLE, INTERNAL_COUNT, DEFAULT_INTERNAL_COUNT)
            if internal != type_text:
                conv = Conversion("narrow", internal, f"{p.name}_internal")
        elif p.direction == "in":
            obj = maps.get(INTERNAL_TABLE, p.kind)
            if obj is not None and obj != type_text:
                conv = Conversion("handle", obj, f"{p.name}_ptr")
    return ResolvedParameter(p, type_text, pointer, conv)


def resolve_function(fn, variant, maps):
    return [resolve_parameter(p, variant, maps, fn.name) for p in fn.parameters]


# ---- validation rules -------------------------------------------------------


class RulesError(BindingError):
    pass


@dataclass
class ValidationRules:
    """Function-name classes plus kind -> rule mapping; the ``rank`` rule is class dependent."""

    classes: dict = field(default_factory=dict)  # class -> list of name substrings, in order
    kind_rules: list = field(default_factory=list)  # (kind pattern, rule) in precedence order

    def function_class(self, fn_name):
        for cls, patterns in self.classes.items():
            if any(pat in fn_name for pat in patterns):
                return cls
        return None

    def rule_for_kind(self, kind):
        for pattern, rule in self.kind_rules:
            if pattern == kind:
                return rule
        for pattern, rule in self.kind_rules:
            if fnmatch.fnmatchcase(kind, pattern):
                return rule
        return "none"


DEFAULT_RULES_TEXT = """\
# function-name classes, first match wins
send: send, Send
recv: recv, Recv, probe, Probe

# KIND RULE (glob patterns allowed; exact names take precedence)
BUFFER buffer_addr
RANK rank
TAG tag_valid
COMMUNICATOR comm_valid
DATATYPE datatype_valid_committed
REQUEST request_valid
*NNI count_nonnegative
"""


def parse_rules(text, path="<rules>", base=None):
    """Parse a rules file; entries override ``base`` (the built-in table when given)."""
    classes = dict(base.classes) if base else {}
    kind_rules = list(base.kind_rules) if base else []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        loc = SourceLocation(path, lineno)
        if ":" in line:
            cls, _, pats = line.partition(":")
            cls = cls.strip()
            if cls not in ("send", "recv"):
                raise RulesError(f"{loc}: unknown function class {cls!r}")
            classes[cls] = [p.strip() for p in pats.split(",") if p.strip()]
            continue
        parts = line.split()
        if len(parts) != 2:
            raise RulesError(f"{loc}: expected 'KIND RULE', got {line!r}")
        kind, rule = parts
        if rule != "rank" and rule not in RULE_IDS:
            raise RulesError(f"{loc}: unknown rule {rule!r}")
        kind_rules = [(k, r) for k, r in kind_rules if k != kind]
        kind_rules.append((kind, rule))
    return ValidationRules(classes, kind_rules)


DEFAULT_RULES = parse_rules(DEFAULT_RULES_TEXT, "<builtin>")

GUARDS = {
    "comm_valid": "MPIR_ERRTEST_COMM({name}, mpi_errno);",
    "datatype_valid_committed": "MPIR_ERRTEST_DATATYPE_COMMITTED({name}, mpi_errno);",
    "rank_send": "MPIR_ERRTEST_SEND_RANK({comm}, {name}, mpi_errno);",
    "rank_recv": "MPIR_ERRTEST_RECV_RANK({comm}, {name}, mpi_errno);",
    "rank_plain": "MPIR_ERRTEST_RANK({comm}, {name}, mpi_errno);",
    "tag_valid": "MPIR_ERRTEST_TAG({name}, mpi_errno);",
    "count_nonnegative": "MPIR_ERRTEST_COUNT({name}, mpi_errno);",
    "buffer_addr": "MPIR_ERRTEST_USERBUFFER({name}, mpi_errno);",
    "request_valid": "MPIR_ERRTEST_REQUEST({name}, mpi_errno);",
    "none": "",
}


def validation_rule_for(p, fn, rules=DEFAULT_RULES):
    rule = rules.rule_for_kind(p.kind)
    if p.direction == "out" and p.kind != "BUFFER":
        rule = "none"
    elif rule == "rank":
        cls = rules.function_class(fn.name)
        rule = {"send": "rank_send", "recv": "rank_recv"}.get(cls, "rank_plain")
    return ValidationRule(p.name, rule, rule)
