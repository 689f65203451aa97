"""Binding-layer generator driven by semantic parameter kinds."""

from .model import (
    ApiRegistry,
    BindingError,
    Block,
    FunctionSpec,
    KindMapSet,
    ParameterSpec,
    SourceLocation,
    UnknownKind,
    UnknownTable,
    kindmap_lookup,
    registry_insert,
)
from .overlay import MergedRegistry, MergeError, OverlayConfig, merge
from .parse import (
    ParseDiagnostic,
    ParseError,
    SchemaError,
    parse_custom_config,
    parse_json_export,
    parse_kind_maps,
    parse_standard_api,
    serialize_registry,
)

__version__ = "0.1.0"
