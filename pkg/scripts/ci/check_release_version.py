#!/usr/bin/env python3
"""Check that a bipglue checkout carries one stable version everywhere it is declared."""

from __future__ import annotations

import argparse
import ast
import re
import sys
import tomllib
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
STABLE_RE = re.compile(r"^(0|[1-9][0-9]*)\.(0|[1-9][0-9]*)\.(0|[1-9][0-9]*)$")


class ReleaseValidationError(RuntimeError):
    """Raised when the declared versions cannot be released."""


def package_version(path: Path) -> str:
    """The string literal assigned to ``__version__`` at module level."""
    module = ast.parse(path.read_text(encoding="utf-8"), filename=str(path))
    for statement in module.body:
        if isinstance(statement, ast.Assign) and any(
            isinstance(t, ast.Name) and t.id == "__version__" for t in statement.targets
        ):
            value = statement.value
            if isinstance(value, ast.Constant) and isinstance(value.value, str):
                return value.value
            raise ReleaseValidationError(f"{path}: __version__ is not a string literal")
    raise ReleaseValidationError(f"{path}: no __version__ assignment")


def read_versions(root: Path = ROOT) -> dict[str, str]:
    with (root / "pyproject.toml").open("rb") as handle:
        project = tomllib.load(handle).get("project", {})
    if "version" not in project:
        raise ReleaseValidationError("pyproject.toml: missing [project] version")
    return {
        "pyproject.toml": str(project["version"]),
        "bipglue/__init__.py": package_version(root / "bipglue" / "__init__.py"),
    }


def validate_versions(tag: str | None, root: Path = ROOT) -> str:
    versions = read_versions(root)
    if len(set(versions.values())) != 1:
        details = ", ".join(f"{path}={version}" for path, version in versions.items())
        raise ReleaseValidationError(f"declared versions do not match: {details}")
    version = versions["pyproject.toml"]
    if STABLE_RE.fullmatch(version) is None:
        raise ReleaseValidationError(f"version {version!r} is not a stable X.Y.Z version")
    if tag is not None:
        if not tag.startswith("v") or STABLE_RE.fullmatch(tag[1:]) is None:
            raise ReleaseValidationError(f"tag {tag!r} must look like vX.Y.Z")
        if tag[1:] != version:
            raise ReleaseValidationError(f"tag {tag!r} does not match version {version!r}")
    return version


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tag", help="release tag (vX.Y.Z); omit to check the sources only")
    parser.add_argument("--root", type=Path, default=ROOT)
    args = parser.parse_args()
    try:
        version = validate_versions(args.tag, args.root)
    except ReleaseValidationError as error:
        print(f"release check failed: {error}", file=sys.stderr)
        raise SystemExit(1) from error
    print(version)


if __name__ == "__main__":
    main()
