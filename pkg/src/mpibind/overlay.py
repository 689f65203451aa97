"""Apply custom overlay files on top of the standard API registry."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from typing import Optional

from .model import CUSTOM, ApiRegistry, BindingError, FunctionSpec, ParameterSpec, SourceLocation


class MergeError(BindingError):
    pass


@dataclass(frozen=True)
class ParameterOverride:
    """A parameter line in an overlay; ``None`` fields leave the standard value alone."""

    name: str
    kind: Optional[str] = None
    constant: Optional[bool] = None
    pointer_hint: Optional[bool] = None
    direction: Optional[str] = None
    length_expr: Optional[str] = None
    description: Optional[str] = None
    location: Optional[SourceLocation] = field(default=None, compare=False)


@dataclass(frozen=True)
class OverlayEntry:
    name: str
    attributes: dict = field(default_factory=dict)
    parameters: tuple = ()
    blocks: dict = field(default_factory=dict)
    location: Optional[SourceLocation] = field(default=None, compare=False)

    def is_new_function(self, standard):
        return self.name not in standard


@dataclass(frozen=True)
class OverlayConfig:
    entries: tuple = ()
    source: str = "<custom>"

    @property
    def group(self):
        """Output group name derived from the file name, e.g. ``c/pt2pt_api.txt`` -> ``pt2pt``."""
        stem = os.path.splitext(os.path.basename(self.source))[0]
        return stem[:-4] if stem.endswith("_api") else stem


@dataclass
class MergedRegistry:
    functions: ApiRegistry
    generation_set: list
    groups: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list, compare=False)

    def generated(self):
        return [self.functions[n] for n in self.generation_set]


def _is_pointer_class(kind, pointer_hint):
    if pointer_hint is not None:
        return pointer_hint
    return kind == "BUFFER"


def _override_param(fn, std, ov, warnings):
    if ov.kind is not None and ov.kind != std.kind:
        if ov.pointer_hint is None and _is_pointer_class(std.kind, std.pointer_hint) != _is_pointer_class(ov.kind, None):
            raise MergeError(
                f"{ov.location or fn.name}: overriding {fn.name}.{std.name} kind "
                f"{std.kind} -> {ov.kind} changes pointer class; add pointer=True|False"
            )
        warnings.append((ov.location, f"{fn.name}.{std.name}: kind {std.kind} overridden by {ov.kind}"))
    changes = {
        k: getattr(ov, k)
        for k in ("kind", "constant", "pointer_hint", "direction", "length_expr", "description")
        if getattr(ov, k) is not None
    }
    return replace(std, **changes)


def _new_param(fn_name, ov):
    if ov.kind is None:
        raise MergeError(f"{ov.location or fn_name}: new parameter {fn_name}.{ov.name} needs a kind")
    return ParameterSpec(
        name=ov.name,
        kind=ov.kind,
        constant=bool(ov.constant),
        pointer_hint=ov.pointer_hint,
        direction=ov.direction or "in",
        length_expr=ov.length_expr,
        description=ov.description,
    )


def apply_entry(fn, entry, warnings):
    attrs = dict(fn.attributes)
    for key, value in entry.attributes.items():
        if value == "":
            attrs.pop(key, None)
        else:
            attrs[key] = value
    params = list(fn.parameters)
    index = {p.name: i for i, p in enumerate(params)}
    for ov in entry.parameters:
        if ov.name in index:
            params[index[ov.name]] = _override_param(fn, params[index[ov.name]], ov, warnings)
        else:
            index[ov.name] = len(params)
            params.append(_new_param(fn.name, ov))
    blocks = dict(fn.blocks)
    blocks.update(entry.blocks)
    return replace(fn, attributes=attrs, parameters=tuple(params), blocks=blocks)


def merge(standard, overlays):
    """Merge overlays in order; only functions named by some overlay are generated."""
    merged = ApiRegistry(standard)
    generation_set, groups, warnings = [], {}, []
    for overlay in overlays:
        for entry in overlay.entries:
            base = merged.get(entry.name)
            if base is None:
                base = FunctionSpec(entry.name, origin=CUSTOM, location=entry.location)
            merged.insert(apply_entry(base, entry, warnings))
            if entry.name not in groups:
                generation_set.append(entry.name)
                groups[entry.name] = overlay.group
    return MergedRegistry(merged, generation_set, groups, warnings)
