"""C binding-layer emitter.

Each generated function becomes a profiling block, an MPICH-style man page
comment and the API definition (validation, handle conversion, early
return, body, error epilogue). Functions with POLY kinds get a ``_c``
large-count twin. Profiling text is confined to two delimited regions so
that schemes can be swapped without touching anything else.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from .kinds import (
    DEFAULT_RULES,
    GUARDS,
    EmitVariant,
    function_has_poly,
    resolve_function,
    validation_rule_for,
)
from .model import BindingError

PROFILE_BEGIN = "/* -- Begin Profiling Block -- */"
PROFILE_END = "/* -- End Profiling Block -- */"
HOOK_BEGIN = "/* -- Begin Profiling Entry Hook -- */"
HOOK_END = "/* -- End Profiling Entry Hook -- */"

CONSUMED_DIRECTIVES = (".desc", ".seealso", ".earlyreturn")
COMMENT_ANCHORS = ("description", "notes")
CODE_ANCHORS = ("body_of_routine", "error_check")
EARLY_RETURNS = ("pt2pt_proc_null",)


class PlanError(BindingError):
    pass


class RenameError(BindingError):
    pass


class MissingBlockAnchor(BindingError):
    pass


class CorpusError(BindingError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("\n".join(str(e) for e in self.errors))


# ---- profiling schemes ------------------------------------------------------


@dataclass(frozen=True)
class ProfilingScheme:
    id: str
    emit_prologue: Callable
    emit_entry_hook: Callable


def _pmpi_rename(name):
    return [
        "#ifndef MPICH_MPI_FROM_PMPI",
        f"#undef {name}",
        f"#define {name} P{name}",
        "#endif",
    ]


def _weak_prologue(sig):
    name = sig.name
    return [
        "#if defined(HAVE_PRAGMA_WEAK)",
        f"#pragma weak {name} = P{name}",
        "#elif defined(HAVE_PRAGMA_HP_SEC_DEF)",
        f"#pragma _HP_SECONDARY_DEF P{name}  {name}",
        "#elif defined(HAVE_PRAGMA_CRI_DUP)",
        f"#pragma _CRI duplicate {name} as P{name}",
        "#elif defined(HAVE_WEAK_ATTRIBUTE)",
        f"{sig.prototype()} __attribute__ ((weak, alias(\"P{name}\")));",
        "#endif",
        "",
        "/* Define MPICH_MPI_FROM_PMPI if weak symbols are not supported to build",
        "   the MPI routines */",
    ] + _pmpi_rename(name)


def _macro_prologue(sig):
    return [
        "/* MPI_ and PMPI_ are separate functions: this file is compiled a second",
        "   time with MPICH_MPI_FROM_PMPI defined to produce the MPI_ symbol */",
    ] + _pmpi_rename(sig.name)


def _qmpi_ids(sig):
    return "Q" + sig.name, sig.name.upper() + "_T"


def _qmpi_prologue(sig):
    qname, tid = _qmpi_ids(sig)
    args = ", ".join(sig.arg_names)
    call_args = f"context, next, {args}" if args else "context, next"
    return _weak_prologue(sig) + [
        "",
        "/* QMPI tool chain (provisional ABI): every attached tool receives the",
        "   context and its tool id and forwards through the next link */",
        f"typedef int ({qname}_t) (QMPI_Context context, int tool_id{sig.tail_params()});",
        "",
        f"int {qname}(QMPI_Context context, int tool_id{sig.tail_params()})",
        "{",
        f"    int next = MPIR_QMPI_next_tool(tool_id, {tid});",
        "    if (next >= 0) {",
        f"        {qname}_t *fn_ptr = ({qname}_t *) MPIR_QMPI_fn_ptrs[next][{tid}];",
        f"        return (*fn_ptr) ({call_args});",
        "    }",
        "    MPIR_QMPI_in_chain = 1;",
        f"    int rc = P{sig.name}({args});",
        "    MPIR_QMPI_in_chain = 0;",
        "    return rc;",
        "}",
    ]


def _qmpi_hook(sig):
    qname, tid = _qmpi_ids(sig)
    args = ", ".join(sig.arg_names)
    call_args = f"MPIR_QMPI_context, first, {args}" if args else "MPIR_QMPI_context, first"
    return [
        "    if (MPIR_QMPI_num_tools > 0 && !MPIR_QMPI_in_chain) {",
        f"        int first = MPIR_QMPI_first_tool_id({tid});",
        f"        {qname}_t *fn_ptr = ({qname}_t *) MPIR_QMPI_fn_ptrs[first][{tid}];",
        f"        return (*fn_ptr) ({call_args});",
        "    }",
    ]


def _nothing(sig):
    return []


SCHEMES = {
    "weak_symbol": ProfilingScheme("weak_symbol", _weak_prologue, _nothing),
    "macro_rename": ProfilingScheme("macro_rename", _macro_prologue, _nothing),
    "qmpi": ProfilingScheme("qmpi", _qmpi_prologue, _qmpi_hook),
    "none": ProfilingScheme("none", _nothing, _nothing),
}


def get_scheme(scheme):
    if isinstance(scheme, ProfilingScheme):
        return scheme
    try:
        return SCHEMES[scheme]
    except KeyError:
        raise BindingError(f"unknown profiling scheme {scheme!r}; choose from {sorted(SCHEMES)}") from None


# ---- plans ------------------------------------------------------------------


@dataclass(frozen=True)
class RenameTable:
    names: frozenset = frozenset()

    def __contains__(self, name):
        return name in self.names

    def validate(self, generation_set):
        stale = sorted(self.names - set(generation_set))
        if stale:
            raise RenameError(f"rename table lists functions that are not generated: {', '.join(stale)}")


def parse_rename_table(text):
    names = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            names.append(line)
    return RenameTable(frozenset(names))


@dataclass(frozen=True)
class CEmitOptions:
    internal_prefix: str = "MPID_"
    log_enter: str = "MPIR_FUNC_TERSE_ENTER"
    log_exit: str = "MPIR_FUNC_TERSE_EXIT"
    cs_enter: str = "MPID_THREAD_CS_ENTER(GLOBAL, MPIR_THREAD_GLOBAL_ALLFUNC_MUTEX)"
    cs_exit: str = "MPID_THREAD_CS_EXIT(GLOBAL, MPIR_THREAD_GLOBAL_ALLFUNC_MUTEX)"
    error_check_macro: str = "HAVE_ERROR_CHECKING"


def base_name(name):
    for pre in ("MPIX_", "MPI_"):
        if name.startswith(pre):
            return name[len(pre):]
    return name


@dataclass
class EmitPlan:
    fn: object
    variants: list
    prefix: str
    scheme: ProfilingScheme
    resolved: dict
    rules: list
    early_return: Optional[str]
    blocks: dict
    f08_variants: list = field(default_factory=list)
    renames: dict = field(default_factory=dict)
    options: CEmitOptions = field(default_factory=CEmitOptions)

    def emitted_name(self, variant=None):
        suffix = variant.suffix if variant is not None else ""
        return self.prefix + base_name(self.fn.name) + suffix

    @property
    def has_big(self):
        return len(self.variants) == 2


def plan_function(fn, maps, rename=RenameTable(), scheme="weak_symbol", rules=DEFAULT_RULES,
                  languages=("c",), options=CEmitOptions()):
    prefix = "MPIX_" if (fn.name in rename or fn.name.startswith("MPIX_")) else "MPI_"
    sizes = ["small", "big"] if function_has_poly(fn) else ["small"]
    variants = [EmitVariant.make("c", s, prefix) for s in sizes]
    f08_variants = [EmitVariant.make("f08", s, prefix) for s in sizes] if "f08" in languages else []
    resolved = {}
    for v in (variants if "c" in languages else []) + f08_variants:
        resolved[v] = resolve_function(fn, v, maps)
    vrules = [validation_rule_for(p, fn, rules) for p in fn.parameters]

    early = fn.attributes.get(".earlyreturn")
    if early is not None:
        if early not in EARLY_RETURNS:
            raise PlanError(f"{fn.name}: unknown .earlyreturn {early!r}")
        if _rank_param(fn) is None:
            raise PlanError(f"{fn.name}: .earlyreturn {early} needs an input RANK parameter")

    for name, blk in fn.blocks.items():
        anchor = re.sub(r"-\d+$", "", name)
        allowed = COMMENT_ANCHORS if blk.flavor == "comment" else CODE_ANCHORS
        if anchor not in allowed:
            raise MissingBlockAnchor(
                f"{fn.name}: {blk.flavor} block {name!r} has no anchor (known: {', '.join(allowed)})")

    renames = {n: "MPIX_" + base_name(n) for n in rename.names}
    return EmitPlan(fn, variants, prefix, get_scheme(scheme), resolved, vrules, early,
                    dict(fn.blocks), f08_variants, renames, options)


def _rank_param(fn):
    for p in fn.parameters:
        if p.kind == "RANK" and p.direction == "in":
            return p
    return None


def unused_directives(fn):
    return [k for k in fn.attributes if k not in CONSUMED_DIRECTIVES]


# ---- C text -----------------------------------------------------------------


def c_param_decl(rp):
    p = rp.source
    const = "const " if p.constant else ""
    if rp.is_pointer and p.length_expr is not None:
        return f"{const}{rp.type_text} {p.name}[]"
    if rp.is_pointer:
        return f"{const}{rp.type_text} *{p.name}"
    return f"{const}{rp.type_text} {p.name}"


@dataclass
class Signature:
    name: str
    params: list  # ResolvedParameter

    @property
    def arg_names(self):
        return [rp.name for rp in self.params]

    def param_list(self):
        return ", ".join(c_param_decl(rp) for rp in self.params) or "void"

    def tail_params(self):
        return "".join(", " + c_param_decl(rp) for rp in self.params)

    def prototype(self):
        return f"int {self.name}({self.param_list()})"


def _max_macro(ctype):
    return "MPIR_" + ctype.split("_", 1)[-1].upper() + "_MAX"


def _man_page(plan, name, maps, lines):
    fn = plan.fn
    desc = fn.attributes.get(".desc", "")
    lines.append("/*@")
    lines.append(f"   {name} - {desc}".rstrip())
    lines.append("")
    _comment_blocks(plan, "description", lines)

    sections = (("in", "Input Parameters:"), ("inout", "Input/Output Parameters:"),
                ("out", "Output Parameters:"))
    for direction, title in sections:
        params = [p for p in fn.parameters if p.direction == direction]
        if not params:
            continue
        lines.append(title)
        for i, p in enumerate(params):
            if len(params) == 1:
                bullet = "."
            else:
                bullet = "+" if i == 0 else ("-" if i == len(params) - 1 else ".")
            text = p.description or p.name.replace("_", " ")
            lis = maps.get("LIS_KIND_MAPPING", p.kind)
            if lis:
                text += f" ({lis})"
            lines.append(f"{bullet} {p.name} - {text}")
        lines.append("")

    _comment_blocks(plan, "notes", lines)
    lines.append(".N Errors")
    lines.append(".N MPI_SUCCESS")
    seealso = fn.attributes.get(".seealso")
    if seealso:
        names = [s.strip() for s in seealso.split(",") if s.strip()]
        lines.append(".seealso: " + ", ".join(plan.renames.get(n, n) for n in names))
    lines.append("@*/")


def _comment_blocks(plan, anchor, lines):
    for name, blk in plan.blocks.items():
        if blk.flavor == "comment" and re.sub(r"-\d+$", "", name) == anchor:
            lines.append(blk.body.rstrip("\n"))
            lines.append("")


def _code_block(plan, anchor):
    blk = plan.blocks.get(anchor)
    if blk is not None and blk.flavor == "code":
        return blk.body
    return None


def emit_variant(plan, variant, maps):
    o = plan.options
    fn = plan.fn
    name = plan.emitted_name(variant)
    resolved = plan.resolved[variant]
    sig = Signature(name, resolved)
    lines = [PROFILE_BEGIN]
    lines += plan.scheme.emit_prologue(sig)
    lines += [PROFILE_END, ""]

    _man_page(plan, name, maps, lines)
    lines.append("")

    lines.append(sig.prototype())
    lines.append("{")
    lines.append(HOOK_BEGIN)
    lines += plan.scheme.emit_entry_hook(sig)
    lines.append(HOOK_END)

    lines.append("    int mpi_errno = MPI_SUCCESS;")
    handles = [rp for rp in resolved if rp.needs_conversion and rp.needs_conversion.action == "handle"]
    narrows = [rp for rp in resolved if rp.needs_conversion and rp.needs_conversion.action == "narrow"]
    for rp in handles:
        lines.append(f"    {rp.needs_conversion.internal_type} *{rp.needs_conversion.local_name} = NULL;")
    for rp in narrows:
        lines.append(f"    {rp.needs_conversion.internal_type} {rp.needs_conversion.local_name};")
    lines.append("")
    lines.append(f"    {o.cs_enter};")
    lines.append(f"    {o.log_enter};")
    lines.append("")

    comm = next((p.name for p in fn.parameters if p.kind == "COMMUNICATOR" and p.direction == "in"),
                "MPI_COMM_NULL")
    lines.append(f"#ifdef {o.error_check_macro}")
    lines.append("    {")
    lines.append("        MPID_BEGIN_ERROR_CHECKS;")
    lines.append("        {")
    for rule in plan.rules:
        if rule.rule_id != "none":
            guard = GUARDS[rule.emitted_guard].format(name=rule.parameter, comm=comm)
            lines.append(f"            {guard}")
    extra = _code_block(plan, "error_check")
    if extra is not None:
        lines.append(extra.rstrip("\n"))
    lines.append("        }")
    lines.append("        MPID_END_ERROR_CHECKS;")
    lines.append("    }")
    lines.append(f"#endif /* {o.error_check_macro} */")
    lines.append("")

    if handles:
        lines.append("    /* convert handles to object pointers */")
        for rp in handles:
            c = rp.needs_conversion
            lines.append(f"    {c.internal_type}_get_ptr({rp.name}, {c.local_name});")
        lines.append("")

    if plan.early_return == "pt2pt_proc_null":
        rank = _rank_param(fn)
        lines.append("    /* return early for trivial cases */")
        lines.append(f"    if ({rank.name} == MPI_PROC_NULL) {{")
        for p in fn.parameters:
            if p.direction == "out" and p.length_expr is None:
                if p.kind == "STATUS":
                    lines.append(f"        MPIR_Status_set_procnull({p.name});")
                elif p.kind == "REQUEST":
                    lines.append(f"        *{p.name} = MPI_REQUEST_NULL;")
        lines.append("        goto fn_exit;")
        lines.append("    }")
        lines.append("")

    if narrows:
        lines.append("    /* narrow large counts to the internal integer type */")
        for rp in narrows:
            c = rp.needs_conversion
            lines.append(f"    if ({rp.name} > {_max_macro(c.internal_type)}) {{")
            lines.append("        mpi_errno = MPIR_Err_create_code(MPI_SUCCESS, MPIR_ERR_RECOVERABLE, __func__,")
            lines.append(f"                                         __LINE__, MPI_ERR_ARG, \"**toobig\", \"**toobig %s\", \"{rp.name}\");")
            lines.append("        goto fn_fail;")
            lines.append("    }")
            lines.append(f"    {c.local_name} = ({c.internal_type}) {rp.name};")
        lines.append("")

    lines.append("    /* ... body of routine ... */")
    body = _code_block(plan, "body_of_routine")
    if body is not None:
        lines.append(body.rstrip("\n"))
    else:
        args = ", ".join(rp.needs_conversion.local_name if rp.needs_conversion else rp.name
                         for rp in resolved)
        lines.append(f"    mpi_errno = {o.internal_prefix}{base_name(fn.name)}({args});")
        lines.append("    if (mpi_errno) {")
        lines.append("        goto fn_fail;")
        lines.append("    }")
    lines.append("    /* ... end of body of routine ... */")
    lines.append("")

    comm_ptr = next((rp.needs_conversion.local_name for rp in handles if rp.source.kind == "COMMUNICATOR"),
                    "NULL")
    lines += [
        "  fn_exit:",
        f"    {o.log_exit};",
        f"    {o.cs_exit};",
        "    return mpi_errno;",
        "",
        "  fn_fail:",
        "    /* --BEGIN ERROR HANDLING-- */",
        f"    mpi_errno = MPIR_Err_return_comm({comm_ptr}, __func__, mpi_errno);",
        "    goto fn_exit;",
        "    /* --END ERROR HANDLING-- */",
        "}",
    ]
    return "\n".join(lines) + "\n"


def emit_c_source(plan, maps):
    """All variants of one function, small first."""
    return "\n".join(emit_variant(plan, v, maps) for v in plan.variants)


def c_file_name(plan):
    return base_name(plan.fn.name).lower() + ".c"


def _file_text(path, sources):
    head = f"/* -- {path} -- generated by mpibind, do not edit */\n\n#include \"mpiimpl.h\"\n"
    return head + "".join("\n" + s for s in sources)


def emit_index_header(plans):
    lines = [
        "/* -- mpi_bindings.h -- generated by mpibind, do not edit */",
        "",
        "#ifndef MPI_BINDINGS_H_INCLUDED",
        "#define MPI_BINDINGS_H_INCLUDED",
        "",
    ]
    for plan in plans:
        for v in plan.variants:
            lines.append(Signature(plan.emitted_name(v), plan.resolved[v]).prototype() + ";")
    lines += ["", "#endif /* MPI_BINDINGS_H_INCLUDED */"]
    return "\n".join(lines) + "\n"


def plan_corpus(merged, maps, rename=RenameTable(), scheme="weak_symbol", rules=DEFAULT_RULES,
                languages=("c",), options=CEmitOptions()):
    """Plan every generated function; errors are collected and raised together."""
    rename.validate(merged.generation_set)
    plans, errors = [], []
    for fn in merged.generated():
        try:
            plans.append(plan_function(fn, maps, rename, scheme, rules, languages, options))
        except BindingError as exc:
            exc.location = fn.location
            errors.append(exc)
    if errors:
        raise CorpusError(errors)
    return plans


def emit_corpus(merged, maps, rename=RenameTable(), scheme="weak_symbol", layout="per-function",
                rules=DEFAULT_RULES, options=CEmitOptions(), plans=None):
    """Return ``{relative path: text}`` for the C target; nothing partial on error."""
    if plans is None:
        plans = plan_corpus(merged, maps, rename, scheme, rules, ("c",), options)
    files, errors = {}, []
    if layout == "per-function":
        for plan in plans:
            path = "c/" + c_file_name(plan)
            try:
                files[path] = _file_text(c_file_name(plan), [emit_c_source(plan, maps)])
            except BindingError as exc:
                errors.append(exc)
    elif layout == "per-group":
        groups = {}
        for plan in plans:
            groups.setdefault(merged.groups.get(plan.fn.name, "misc"), []).append(plan)
        for group, members in groups.items():
            try:
                files[f"c/{group}.c"] = _file_text(f"{group}.c", [emit_c_source(p, maps) for p in members])
            except BindingError as exc:
                errors.append(exc)
    else:
        raise BindingError(f"unknown layout {layout!r}")
    if errors:
        raise CorpusError(errors)
    files["c/mpi_bindings.h"] = emit_index_header(plans)
    return files


DEFINITION_RE = re.compile(r"^int (P?MPIX?_\w+)\(.*\)\n\{", re.MULTILINE)


def count_definitions(text):
    return DEFINITION_RE.findall(text)


def mask_profiling(text):
    """Blank out the profiling regions, keeping their delimiters."""
    for begin, end in ((PROFILE_BEGIN, PROFILE_END), (HOOK_BEGIN, HOOK_END)):
        text = re.sub(re.escape(begin) + r"\n.*?" + re.escape(end), begin + "\n" + end, text, flags=re.DOTALL)
    return text
