"""Lightpath provisioning in hybrid SSMF/ULL elastic optical networks."""

from __future__ import annotations

import json
import os
from typing import Any

from . import _core
from ._core import HueonError, deployment_cost

__all__ = ["Network", "HueonError", "deployment_cost"]


class Network:
    """A topology with its OSNR inputs and (optionally) a fixed demand list."""

    def __init__(self, core: _core.Network):
        self._core = core

    @classmethod
    def from_instance(cls, path: str | os.PathLike) -> "Network":
        return cls(_core.Network.from_instance(os.fspath(path)))

    @classmethod
    def from_files(
        cls,
        topology: str | os.PathLike,
        link_osnr: str | os.PathLike | None = None,
        path_osnr: str | os.PathLike | None = None,
        demands: list[dict[str, Any]] | None = None,
    ) -> "Network":
        return cls(
            _core.Network.from_files(
                os.fspath(topology),
                os.fspath(link_osnr) if link_osnr else None,
                os.fspath(path_osnr) if path_osnr else None,
                json.dumps(demands) if demands is not None else None,
            )
        )

    @property
    def nodes(self) -> list[str]:
        return self._core.nodes

    @property
    def link_count(self) -> int:
        return self._core.link_count

    @property
    def total_slots(self) -> int:
        return self._core.total_slots

    @property
    def demands(self) -> list[dict[str, Any]]:
        return json.loads(self._core.demands_json())

    def run_static(
        self,
        strategy: str = "oa",
        *,
        alpha: float = 1.12,
        x_max: float = 200.0,
        seed: int = 1,
        fibers: str = "both",
        algorithm: str = "swp",
        use_instance_demands: bool | None = None,
    ) -> dict[str, Any]:
        """Metrics plus an assignment dump under "dump".

        Uses the instance's demands when it has any, else one generated
        demand per node pair.
        """
        if use_instance_demands is None:
            use_instance_demands = bool(self.demands)
        return json.loads(
            self._core.run_static_json(strategy, alpha, x_max, seed, fibers, algorithm, use_instance_demands)
        )

    def run_dynamic(
        self,
        strategy: str = "su",
        *,
        load: float = 30.0,
        seed: int = 1,
        x_max: float = 700.0,
        holding: float = 1.0,
        events: int = 10000,
        warmup: int | None = None,
        fibers: str = "both",
        algorithm: str = "swp",
    ) -> dict[str, Any]:
        return json.loads(
            self._core.run_dynamic_json(strategy, load, seed, x_max, holding, events, warmup, fibers, algorithm)
        )

    def oracle(self, fibers: str = "both") -> dict[str, Any]:
        """Exact optimum by exhaustive search (tiny instances only)."""
        return json.loads(self._core.oracle_json(fibers))

    def to_lp(self) -> str:
        return self._core.to_lp()

    def export_lp(self, stem: str | os.PathLike) -> None:
        self._core.export_lp(os.fspath(stem))

    def validate(self, dump: dict[str, Any]) -> list[tuple[str, str]]:
        """(kind, message) for every violated constraint; empty when valid."""
        return self._core.validate_json(json.dumps(dump))
