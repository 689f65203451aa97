"""``use mpi_f08`` binding emitter: C interface blocks, wrappers and generics."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cgen import base_name, c_param_decl
from .kinds import EmitVariant, resolve_function
from .model import BindingError, SourceLocation

ASSUMED = "TYPE(*), DIMENSION(..)"
OUT_SEMANTIC_KINDS = frozenset({"STATUS"})
MAX_LINE = 100


class ConstantsError(BindingError):
    pass


@dataclass(frozen=True)
class Sentinel:
    fortran: str
    c: str


@dataclass
class ConstantsTable:
    """Kind -> sentinel pairs. ``KIND[]`` keys apply to array (length=) parameters."""

    entries: dict = field(default_factory=dict)

    def lookup(self, p):
        key = p.kind + ("[]" if p.length_expr is not None else "")
        return self.entries.get(key, ())


def parse_constants(text, path="<constants>"):
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        pair = [s.strip() for s in rest.split("->")]
        if not sep or len(pair) != 2 or not all(pair) or not key.strip():
            raise ConstantsError(f"{SourceLocation(path, lineno)}: expected 'KIND: FORTRAN_NAME -> C_NAME'")
        entries.setdefault(key.strip(), ())
        entries[key.strip()] += (Sentinel(*pair),)
    return ConstantsTable(entries)


@dataclass
class F08Interface:
    fn: object
    resolved: dict
    choice_buffer_params: list
    binds_directly: bool


def f08_interface(plan, constants=None):
    constants = constants or ConstantsTable()
    return F08Interface(
        fn=plan.fn,
        resolved={v: plan.resolved[v] for v in plan.f08_variants},
        choice_buffer_params=[p.name for p in plan.fn.parameters if p.kind == "BUFFER"],
        binds_directly=not any(constants.lookup(p) for p in plan.fn.parameters),
    )


def _ensure_f08(plan, maps):
    if not plan.f08_variants:
        plan.f08_variants = [EmitVariant.make("f08", v.size, plan.prefix) for v in plan.variants]
        for v in plan.f08_variants:
            plan.resolved[v] = resolve_function(plan.fn, v, maps)
    return plan


def c_variant(plan, size):
    return next(v for v in plan.variants if v.size == size)


def iface_name(plan, size):
    return "c_" + plan.emitted_name(c_variant(plan, size))


def bind_label(plan, size):
    """C symbol the interface binds to; choice-buffer routines go through a descriptor shim."""
    name = plan.emitted_name(c_variant(plan, size))
    if any(p.kind == "BUFFER" for p in plan.fn.parameters):
        return "MPIR_" + base_name(name) + "_cdesc"
    return name


def specific_name(plan, size):
    base = plan.emitted_name()
    return base + ("_c_f08" if size == "big" else "_f08")


def _wrap(head, args, tail=""):
    """Fortran free-form continuation for long argument lists."""
    line = f"{head}({', '.join(args)}){tail}"
    if len(line) <= MAX_LINE:
        return [line]
    out, cur = [], f"{head}("
    for i, a in enumerate(args):
        piece = a + (", " if i < len(args) - 1 else f"){tail}")
        if len(cur) + len(piece) > MAX_LINE - 2:
            out.append(cur.rstrip() + " &")
            cur = "        " + piece
        else:
            cur += piece
    out.append(cur)
    return out


def _decl(rp, for_interface, substituted):
    p = rp.source
    attrs = []
    if p.kind == "BUFFER":
        type_text = ASSUMED
    elif substituted and for_interface:
        type_text = "TYPE(c_ptr)"
        attrs.append("value")
    else:
        type_text = rp.type_text
    if p.length_expr is not None and p.kind != "BUFFER" and not (substituted and for_interface):
        attrs.append(f"dimension({p.length_expr})")
    if for_interface and not rp.is_pointer and p.direction == "in" and "value" not in attrs:
        attrs.append("value")
    if substituted and not for_interface:
        attrs.append("target")
    intent = "in" if (substituted and for_interface) else p.direction
    attrs.append(f"intent({intent})")
    return f"{type_text}, {', '.join(attrs)} :: {p.name}"


def emit_f08_interface(plan, maps=None, constants=None, warnings=None):
    """Interface blocks declaring the C-linkable routine of each variant."""
    if maps is not None:
        _ensure_f08(plan, maps)
    constants = constants or ConstantsTable()
    out = []
    if warnings is not None:
        for p in plan.fn.parameters:
            if p.kind in OUT_SEMANTIC_KINDS and p.direction == "in" and not p.constant:
                warnings.append((plan.fn.location,
                                 f"{plan.fn.name}.{p.name}: {p.kind} parameter has no "
                                 f"output direction, treated as intent(in)"))
    for v in plan.f08_variants:
        resolved = plan.resolved[v]
        name = iface_name(plan, v.size)
        args = [rp.name for rp in resolved]
        out += _wrap(f"    function {name}", args, " &")
        out.append(f"            bind(C, name=\"{bind_label(plan, v.size)}\") result(ierror)")
        out.append("        use, intrinsic :: iso_c_binding")
        out.append("        use :: mpi_f08_types")
        out.append("        implicit none")
        for rp in resolved:
            out.append("        " + _decl(rp, True, bool(constants.lookup(rp.source))))
        out.append("        integer(c_int) :: ierror")
        out.append(f"    end function {name}")
        out.append("")
    return "\n".join(out)


def emit_f08_wrapper(plan, maps=None, constants=None):
    """Wrapper subroutine per variant: sentinel substitution, then the interface call."""
    if maps is not None:
        _ensure_f08(plan, maps)
    constants = constants or ConstantsTable()
    out = []
    for v in plan.f08_variants:
        resolved = plan.resolved[v]
        name = specific_name(plan, v.size)
        iface = iface_name(plan, v.size)
        subs = [(rp, constants.lookup(rp.source)) for rp in resolved if constants.lookup(rp.source)]
        out += _wrap(f"subroutine {name}", [rp.name for rp in resolved] + ["ierror"])
        out.append("    use, intrinsic :: iso_c_binding")
        out.append("    use :: mpi_f08_types")
        out.append(f"    use :: mpi_c_interface, only : {iface}")
        out.append("    implicit none")
        for rp in resolved:
            out.append("    " + _decl(rp, False, any(r is rp for r, _ in subs)))
        out.append("    integer, optional, intent(out) :: ierror")
        out.append("    integer(c_int) :: ierror_c")
        for rp, _ in subs:
            out.append(f"    type(c_ptr) :: {rp.name}_cptr")
        out.append("")
        for rp, sentinels in subs:
            for i, s in enumerate(sentinels):
                kw = "if" if i == 0 else "else if"
                out.append(f"    {kw} (c_associated(c_loc({rp.name}), c_loc({s.fortran}))) then")
                out.append(f"        {rp.name}_cptr = {s.c}")
            out.append("    else")
            out.append(f"        {rp.name}_cptr = c_loc({rp.name})")
            out.append("    end if")
        call_args = [rp.name + ("_cptr" if any(r is rp for r, _ in subs) else "") for rp in resolved]
        out += _wrap(f"    ierror_c = {iface}", call_args)
        out.append("    if (present(ierror)) ierror = ierror_c")
        out.append(f"end subroutine {name}")
        out.append("")
    return "\n".join(out)


def emit_f08_generic(fn, plan):
    """One public generic name resolving to the small (and large-count) specific."""
    name = plan.emitted_name()
    out = [f"    interface {name}"]
    for v in plan.f08_variants or plan.variants:
        out.append(f"        procedure :: {specific_name(plan, v.size)}")
    out.append(f"    end interface {name}")
    return "\n".join(out) + "\n"


def emit_cdesc_stubs(plans):
    """C side of the choice-buffer shim: declarations plus pass-through stub bodies.

    Decoding the descriptor beyond ``base_addr`` depends on the compiler's
    descriptor ABI and is left to the runtime.
    """
    lines = [
        "/* -- mpi_f08_cdesc.c -- generated by mpibind, do not edit */",
        "",
        "#include \"mpiimpl.h\"",
        "#include <ISO_Fortran_binding.h>",
        "",
    ]
    for plan in plans:
        if not any(p.kind == "BUFFER" for p in plan.fn.parameters):
            continue
        for v in plan.variants:
            params = []
            for rp in plan.resolved[v]:
                if rp.source.kind == "BUFFER":
                    params.append(f"CFI_cdesc_t *{rp.name}_desc")
                else:
                    params.append(c_param_decl(rp))
            label = bind_label(plan, v.size)
            lines.append(f"int {label}({', '.join(params)});")
            lines.append(f"int {label}({', '.join(params)})")
            lines.append("{")
            for rp in plan.resolved[v]:
                if rp.source.kind == "BUFFER":
                    lines.append(f"    void *{rp.name} = {rp.name}_desc->base_addr;")
            args = ", ".join(rp.name for rp in plan.resolved[v])
            lines.append(f"    return P{plan.emitted_name(v)}({args});")
            lines.append("}")
            lines.append("")
    return "\n".join(lines)


def emit_f08_corpus(plans, maps, constants=None, warnings=None):
    plans = [_ensure_f08(p, maps) for p in plans]
    iface = ["! -- mpi_c_interface.f90 -- generated by mpibind, do not edit", "",
             "module mpi_c_interface", "    implicit none", "    interface", ""]
    for p in plans:
        iface.append(emit_f08_interface(p, constants=constants, warnings=warnings))
    iface += ["    end interface", "end module mpi_c_interface", ""]

    wrappers = ["! -- mpi_f08_wrappers.f90 -- generated by mpibind, do not edit", "",
                "module mpi_f08_wrappers", "    implicit none", "contains", ""]
    for p in plans:
        wrappers.append(emit_f08_wrapper(p, constants=constants))
    wrappers += ["end module mpi_f08_wrappers", ""]

    generic = ["! -- mpi_f08.f90 -- generated by mpibind, do not edit", "",
               "module mpi_f08", "    use :: mpi_f08_types", "    use :: mpi_f08_wrappers",
               "    implicit none", ""]
    for p in plans:
        generic.append(emit_f08_generic(p.fn, p))
    generic += ["end module mpi_f08", ""]

    return {
        "f08/mpi_c_interface.f90": "\n".join(iface),
        "f08/mpi_f08_wrappers.f90": "\n".join(wrappers),
        "f08/mpi_f08.f90": "\n".join(generic),
        "f08/mpi_f08_cdesc.c": emit_cdesc_stubs(plans),
    }
