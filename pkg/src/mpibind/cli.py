"""Command-line driver: parse, merge, plan, emit, write atomically."""

from __future__ import annotations

import argparse
import os
import shutil
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional

from . import cgen, f08gen
from .kinds import DEFAULT_RULES, INTERNAL_TABLE, function_has_poly, parse_rules
from .model import ApiRegistry, BindingError, SourceLocation
from .overlay import merge
from .parse import (
    ParseDiagnostic,
    ParseError,
    load_api_file,
    parse_custom_config,
    parse_kind_maps,
    serialize_registry,
)

TARGETS = ("c", "f08")
ENV_PREFIX = "MPIBIND_"


@dataclass
class GeneratorConfig:
    standard_api_paths: list
    kind_map_path: str
    custom_config_paths: list
    output_dir: str = "out"
    rename_table_path: Optional[str] = None
    validation_rules_path: Optional[str] = None
    constants_table_path: Optional[str] = None
    profiling_scheme: str = "weak_symbol"
    targets: tuple = TARGETS
    internal_prefix: str = "MPID_"
    mode: str = "autogen"
    layout: str = "per-function"
    api_format: Optional[str] = None  # None: by extension

    def check(self):
        if not self.targets:
            raise BindingError("no targets")
        bad = [t for t in self.targets if t not in TARGETS]
        if bad:
            raise BindingError(f"unknown targets {bad}; choose from {', '.join(TARGETS)}")
        if not self.standard_api_paths:
            raise BindingError("at least one standard API file is required (--api)")
        if not self.custom_config_paths:
            raise BindingError("at least one custom config file is required (--custom)")
        if self.mode not in ("autogen", "configure"):
            raise BindingError(f"unknown mode {self.mode!r}")
        out = os.path.realpath(self.output_dir)
        for path in self.input_paths():
            if os.path.realpath(path) == out:
                raise BindingError(f"output directory {self.output_dir} is also an input")

    def input_paths(self):
        paths = list(self.standard_api_paths) + [self.kind_map_path] + list(self.custom_config_paths)
        paths += [p for p in (self.rename_table_path, self.validation_rules_path, self.constants_table_path) if p]
        return paths


@dataclass
class Generated:
    files: dict
    merged: object
    plans: list
    warnings: list = field(default_factory=list)


@dataclass
class RunReport:
    exit_code: int
    files: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def summary(self):
        lines = [f"  wrote {p}" for p in self.files]
        for target, c in self.counts.items():
            lines.append(f"{target}: {c['functions']} functions, {c['definitions']} definitions "
                         f"({c['large_count']} large-count)")
        nerr = sum(d.severity == "error" for d in self.diagnostics)
        lines.append(f"{nerr} errors, {len(self.diagnostics) - nerr} warnings")
        return "\n".join(lines)


def _read(path):
    with open(path, encoding="utf-8") as f:
        return f.read()


def load_inputs(config):
    """Parse every input file, collecting diagnostics across all of them."""
    diags = []
    standard = ApiRegistry()
    for path in config.standard_api_paths:
        try:
            for fn in load_api_file(path, config.api_format):
                standard.insert(fn)
        except ParseError as exc:
            diags += exc.diagnostics
    overlays = []
    for path in config.custom_config_paths:
        try:
            overlays.append(parse_custom_config(_read(path), path))
        except ParseError as exc:
            diags += exc.diagnostics
    maps = None
    try:
        maps = parse_kind_maps(_read(config.kind_map_path), config.kind_map_path)
    except ParseError as exc:
        diags += exc.diagnostics
    if diags:
        raise ParseError(diags)
    return standard, overlays, maps


def generate(config):
    """Everything up to (not including) writing; returns the full in-memory tree."""
    config.check()
    standard, overlays, maps = load_inputs(config)
    merged = merge(standard, overlays)
    warnings = [ParseDiagnostic(loc or SourceLocation("<merge>", 1), "warning", msg)
                for loc, msg in merged.warnings]

    rules = DEFAULT_RULES
    if config.validation_rules_path:
        rules = parse_rules(_read(config.validation_rules_path), config.validation_rules_path, DEFAULT_RULES)
    rename = cgen.RenameTable()
    if config.rename_table_path:
        rename = cgen.parse_rename_table(_read(config.rename_table_path))
    constants = f08gen.ConstantsTable()
    if config.constants_table_path:
        constants = f08gen.parse_constants(_read(config.constants_table_path), config.constants_table_path)

    options = cgen.CEmitOptions(internal_prefix=config.internal_prefix)
    plans = cgen.plan_corpus(merged, maps, rename, config.profiling_scheme, rules,
                             ("c",) + (("f08",) if "f08" in config.targets else ()), options)

    for plan in plans:
        for key in cgen.unused_directives(plan.fn):
            loc = plan.fn.location or SourceLocation("<merge>", 1)
            warnings.append(ParseDiagnostic(loc, "warning", f"{plan.fn.name}: directive {key} is not used"))

    used = {"LIS_KIND_MAPPING", INTERNAL_TABLE}
    for lang in config.targets:
        for size in ("SMALL", "BIG"):
            table = f"{size}_{lang.upper()}_KIND_MAP"
            if table in maps:
                used.update(maps.chain(table))
    for table in maps.tables:
        if table not in used:
            loc = SourceLocation(config.kind_map_path, maps.lines.get(table, 1))
            warnings.append(ParseDiagnostic(loc, "warning", f"kind-map table {table} is not used by any target"))

    files = {}
    if "c" in config.targets:
        files.update(cgen.emit_corpus(merged, maps, rename, config.profiling_scheme, config.layout,
                                      rules, options, plans=plans))
    if "f08" in config.targets:
        fw = []
        files.update(f08gen.emit_f08_corpus(plans, maps, constants, fw))
        warnings += [ParseDiagnostic(loc or SourceLocation("<f08>", 1), "warning", msg) for loc, msg in fw]
    return Generated(files, merged, plans, warnings)


def write_tree(files, out_dir):
    """Stage every file in a sibling temp dir, then move them into place.

    Files being replaced are parked in the staging dir first, so a failure
    partway through the moves can be rolled back.
    """
    out_dir = os.path.abspath(out_dir)
    parent = os.path.dirname(out_dir)
    os.makedirs(parent, exist_ok=True)
    stage = tempfile.mkdtemp(prefix=".mpibind-", dir=parent)
    new_root, backup_root = os.path.join(stage, "new"), os.path.join(stage, "old")
    done, made_dirs = [], []
    try:
        for rel, text in files.items():
            dest = os.path.join(new_root, rel)
            os.makedirs(os.path.dirname(dest), exist_ok=True)
            with open(dest, "w", encoding="ascii", newline="\n") as f:
                f.write(text)
        try:
            for rel in files:
                dest = os.path.join(out_dir, rel)
                missing = []
                d = os.path.dirname(dest)
                while not os.path.isdir(d):
                    missing.append(d)
                    d = os.path.dirname(d)
                os.makedirs(os.path.dirname(dest), exist_ok=True)
                made_dirs.extend(reversed(missing))
                backup = None
                if os.path.lexists(dest):
                    backup = os.path.join(backup_root, rel)
                    os.makedirs(os.path.dirname(backup), exist_ok=True)
                    os.replace(dest, backup)
                done.append((dest, backup))
                os.replace(os.path.join(new_root, rel), dest)
        except BaseException:
            for dest, backup in reversed(done):
                if backup is not None:
                    os.replace(backup, dest)
                elif os.path.lexists(dest):
                    os.remove(dest)
            for d in reversed(made_dirs):
                try:
                    os.rmdir(d)
                except OSError:
                    pass
            raise
    finally:
        shutil.rmtree(stage, ignore_errors=True)


def _diagnostics_from(exc):
    if isinstance(exc, ParseError):
        return exc.diagnostics
    errors = exc.errors if isinstance(exc, cgen.CorpusError) else [exc]
    out = []
    for e in errors:
        loc = getattr(e, "location", None) or SourceLocation("<config>", 1)
        out.append(ParseDiagnostic(loc, "error", str(e)))
    return out


def run(config):
    try:
        gen = generate(config)
        write_tree(gen.files, config.output_dir)
    except (BindingError, OSError, UnicodeError) as exc:
        return RunReport(1, diagnostics=_diagnostics_from(exc) if isinstance(exc, BindingError)
                         else [ParseDiagnostic(SourceLocation("<io>", 1), "error", str(exc))])
    counts = {}
    ndefs = sum(len(p.variants) for p in gen.plans)
    nbig = sum(function_has_poly(p.fn) for p in gen.plans)
    for target in config.targets:
        counts[target] = {"functions": len(gen.plans), "definitions": ndefs, "large_count": nbig}
    return RunReport(0, sorted(gen.files), counts, gen.warnings)


def dump_merged(config):
    standard, overlays, _ = load_inputs(config)
    return serialize_registry(merge(standard, overlays).functions)


def build_parser():
    ap = argparse.ArgumentParser(prog="mpibind", description=__doc__)
    ap.add_argument("--api", nargs="+", action="extend", default=[], metavar="PATH",
                    help="standard API file(s), .txt or .json")
    ap.add_argument("--format", choices=("text", "json"), help="force the standard API format")
    ap.add_argument("--kind-map", required=True, metavar="PATH")
    ap.add_argument("--custom", nargs="+", action="extend", default=[], metavar="PATH",
                    help="custom overlay file(s), in merge order")
    ap.add_argument("--rename-table", metavar="PATH")
    ap.add_argument("--rules", metavar="PATH", help="validation rules file")
    ap.add_argument("--constants", metavar="PATH", help="F08 sentinel constants table")
    ap.add_argument("--scheme", choices=sorted(cgen.SCHEMES))
    ap.add_argument("--target", default="c,f08", help="comma separated subset of c,f08")
    ap.add_argument("--out", default="out", metavar="DIR")
    ap.add_argument("--internal-prefix")
    ap.add_argument("--mode", choices=("autogen", "configure"), default="autogen")
    ap.add_argument("--layout", choices=("per-function", "per-group"), default="per-function")
    ap.add_argument("--dump-merged", action="store_true", help="print the merged registry and exit")
    return ap


def config_from_args(args, environ=None):
    environ = os.environ if environ is None else environ
    scheme, prefix = args.scheme, args.internal_prefix
    # configure runs may take build-environment defaults; autogen output must not depend on them
    if args.mode == "configure":
        scheme = scheme or environ.get(ENV_PREFIX + "SCHEME")
        prefix = prefix or environ.get(ENV_PREFIX + "INTERNAL_PREFIX")
    return GeneratorConfig(
        standard_api_paths=args.api,
        kind_map_path=args.kind_map,
        custom_config_paths=args.custom,
        output_dir=args.out,
        rename_table_path=args.rename_table,
        validation_rules_path=args.rules,
        constants_table_path=args.constants,
        profiling_scheme=scheme or "weak_symbol",
        targets=tuple(t.strip() for t in args.target.split(",") if t.strip()),
        internal_prefix=prefix or "MPID_",
        mode=args.mode,
        layout=args.layout,
        api_format=args.format,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    if args.dump_merged:
        try:
            sys.stdout.write(dump_merged(config))
        except BindingError as exc:
            for d in _diagnostics_from(exc):
                print(d, file=sys.stderr)
            return 1
        return 0
    report = run(config)
    for d in report.diagnostics:
        print(d, file=sys.stderr)
    if report.exit_code == 0:
        print(f"mpibind: mode={config.mode} scheme={config.profiling_scheme} "
              f"targets={','.join(config.targets)} out={config.output_dir}")
        print(report.summary())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
