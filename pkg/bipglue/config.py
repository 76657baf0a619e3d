from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GlueConfig:
    max_ports: int = 16
    max_splits: int = 64
    strict_roots: bool = False
    check_contracts: bool = True

    @staticmethod
    def from_args(
        max_ports: int = 16,
        max_splits: int = 64,
        strict_roots: bool = False,
        check_contracts: bool = True,
        **kwargs,
    ) -> "GlueConfig":
        _ = kwargs
        if int(max_ports) < 0:
            raise ValueError(f"max_ports must be non-negative, got {max_ports}")
        if int(max_splits) < 0:
            raise ValueError(f"max_splits must be non-negative, got {max_splits}")
        return GlueConfig(
            max_ports=int(max_ports),
            max_splits=int(max_splits),
            strict_roots=bool(strict_roots),
            check_contracts=bool(check_contracts),
        )


DEFAULT_CONFIG = GlueConfig()


def resolve(config: GlueConfig | None) -> GlueConfig:
    return DEFAULT_CONFIG if config is None else config
