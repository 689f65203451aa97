"""Golden snapshots: pinned generator configs and byte-exact tree comparison.

    python3 -m mpibind.snapshot update <config-id> [--root DIR]
    python3 -m mpibind.snapshot verify <config-id> [--root DIR]
"""

from __future__ import annotations

import argparse
import difflib
import os
import shutil
import sys
import tempfile
from dataclasses import dataclass, field, replace
from typing import Optional

from .cgen import mask_profiling
from .cli import GeneratorConfig, generate, write_tree
from .model import BindingError

CUSTOM_FILES = ("pt2pt_api.txt", "request_api.txt", "coll_api.txt", "comm_api.txt",
                "datatype_api.txt", "mpix_api.txt")


class MissingSnapshot(BindingError):
    pass


@dataclass(frozen=True)
class PinnedConfig:
    """Generator inputs relative to the fixtures directory."""

    api: tuple
    kind_map: str
    custom: tuple
    rename_table: Optional[str] = None
    rules: Optional[str] = None
    constants: Optional[str] = None
    scheme: str = "weak_symbol"
    targets: tuple = ("c", "f08")

    def resolve(self, fixtures):
        j = lambda p: os.path.join(fixtures, p) if p else None  # noqa: E731
        return GeneratorConfig(
            standard_api_paths=[j(p) for p in self.api],
            kind_map_path=j(self.kind_map),
            custom_config_paths=[j(p) for p in self.custom],
            output_dir=os.path.join(tempfile.gettempdir(), "mpibind-unused"),
            rename_table_path=j(self.rename_table),
            validation_rules_path=j(self.rules),
            constants_table_path=j(self.constants),
            profiling_scheme=self.scheme,
            targets=self.targets,
        )


PINNED = {
    "baseline": PinnedConfig(
        api=("mpi_standard_api.txt",),
        kind_map="apis_mapping.txt",
        custom=tuple("custom/" + f for f in CUSTOM_FILES),
        rename_table="mpix_rename.txt",
        rules="validation_rules.txt",
        constants="f08_constants.txt",
    ),
    "send_example": PinnedConfig(
        api=("send_example/mpi_standard_api.txt",),
        kind_map="apis_mapping.txt",
        custom=("send_example/pt2pt_api.txt",),
        targets=("c",),
    ),
}


@dataclass
class SnapshotResult:
    ok: bool
    first_divergence: Optional[tuple] = None  # (relpath, line) or None
    diff: str = ""
    changed_files: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def default_root():
    """Repository root: the nearest ancestor of cwd holding fixtures/."""
    cur = os.path.abspath(os.getcwd())
    while True:
        if os.path.isdir(os.path.join(cur, "fixtures")):
            return cur
        parent = os.path.dirname(cur)
        if parent == cur:
            return os.getcwd()
        cur = parent


def _read_tree(root):
    out = {}
    for dirpath, _, names in os.walk(root):
        for n in names:
            full = os.path.join(dirpath, n)
            with open(full, encoding="ascii", newline="") as f:
                out[os.path.relpath(full, root).replace(os.sep, "/")] = f.read()
    return out


def regenerate(config_id, root=None, scheme=None, overrides=None):
    """Run the pinned config in memory. ``overrides`` maps fixture relpaths to replacement text."""
    if config_id not in PINNED:
        raise MissingSnapshot(f"no pinned config named {config_id!r}")
    root = root or default_root()
    pinned = PINNED[config_id]
    if scheme:
        pinned = replace(pinned, scheme=scheme)
    fixtures = os.path.join(root, "fixtures")
    if not overrides:
        return generate(pinned.resolve(fixtures)).files
    with tempfile.TemporaryDirectory() as tmp:
        copy = os.path.join(tmp, "fixtures")
        shutil.copytree(fixtures, copy)
        for rel, text in overrides.items():
            with open(os.path.join(copy, rel), "w", encoding="utf-8") as f:
                f.write(text)
        return generate(pinned.resolve(copy)).files


def compare_trees(expected, actual, masked=False):
    if masked:
        expected = {k: mask_profiling(v) for k, v in expected.items()}
        actual = {k: mask_profiling(v) for k, v in actual.items()}
    changed = sorted(k for k in set(expected) | set(actual) if expected.get(k) != actual.get(k))
    if not changed:
        return SnapshotResult(True)
    rel = changed[0]
    a = expected.get(rel, "").splitlines(keepends=True)
    b = actual.get(rel, "").splitlines(keepends=True)
    line = next((i + 1 for i, (x, y) in enumerate(zip(a, b)) if x != y), min(len(a), len(b)) + 1)
    parts = []
    for k in changed:
        parts.extend(difflib.unified_diff(expected.get(k, "").splitlines(keepends=True),
                                          actual.get(k, "").splitlines(keepends=True),
                                          f"golden/{k}", f"generated/{k}"))
    return SnapshotResult(False, (rel, line), "".join(parts), changed)


def golden_dir(config_id, root=None):
    return os.path.join(root or default_root(), "tests", "golden", config_id)


def verify_snapshot(config_id, root=None, scheme=None, masked=False, overrides=None):
    """Regenerate the pinned config and compare it to ``tests/golden/<config_id>``."""
    gdir = golden_dir(config_id, root)
    if not os.path.isdir(gdir):
        raise MissingSnapshot(f"no golden tree at {gdir}")
    actual = regenerate(config_id, root, scheme, overrides)
    return compare_trees(_read_tree(gdir), actual, masked)


def update_snapshot(config_id, root=None):
    gdir = golden_dir(config_id, root)
    files = regenerate(config_id, root)
    if os.path.isdir(gdir):
        shutil.rmtree(gdir)
    write_tree(files, gdir)
    return sorted(files)


def main(argv=None):
    ap = argparse.ArgumentParser(prog="python3 -m mpibind.snapshot")
    ap.add_argument("action", choices=("update", "verify"))
    ap.add_argument("config_id", nargs="*", help="pinned config ids (default: all)")
    ap.add_argument("--root", help="repository root holding fixtures/ and tests/golden/")
    args = ap.parse_args(argv)
    status = 0
    for cid in args.config_id or sorted(PINNED):
        if args.action == "update":
            files = update_snapshot(cid, args.root)
            print(f"{cid}: wrote {len(files)} files")
            continue
        res = verify_snapshot(cid, args.root)
        if res.ok:
            print(f"{cid}: ok")
        else:
            status = 1
            print(f"{cid}: differs at {res.first_divergence[0]}:{res.first_divergence[1]}")
            sys.stdout.write(res.diff)
    return status


if __name__ == "__main__":
    sys.exit(main())
