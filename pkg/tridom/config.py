import os
from dataclasses import dataclass, fields, replace
from typing import Any

from .errors import ConfigError

ENV_PREFIX = "TRIDOM_"


@dataclass(kw_only=True, frozen=True)
class SolverConfig:
    """Tunables shared by the solvers, the oracle and the generators."""

    exact_cap: int = 16
    paired_mop_oracle_max: int = 9
    semipaired_mop_oracle_max: int = 11
    check_lifts: bool = True
    layout_iterations: int = 200
    flips_per_vertex: int = 2

    def replace(self, **kwargs) -> "SolverConfig":
        """Returns a new SolverConfig with the given fields replaced."""
        return replace(self, **kwargs)


DEFAULT_CONFIG = SolverConfig()


def _coerce(name: str, raw: Any, template: Any) -> Any:
    if isinstance(raw, type(template)):
        return raw
    text = str(raw).strip()
    try:
        if isinstance(template, bool):
            if text.lower() in ("1", "true", "yes", "on"):
                return True
            if text.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(text)
        return type(template)(text)
    except ValueError:
        raise ConfigError(f"bad value for {name}: {raw!r}", key=name, value=str(raw)) from None


def load_config(**overrides: Any) -> SolverConfig:
    """Defaults, then TRIDOM_* environment variables, then explicit overrides."""
    known = {f.name: getattr(DEFAULT_CONFIG, f.name) for f in fields(SolverConfig)}
    unknown = sorted(set(overrides) - set(known))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}", keys=unknown)

    values: dict[str, Any] = {}
    for name, template in known.items():
        env = os.getenv(ENV_PREFIX + name.upper())
        if env is not None:
            values[name] = _coerce(name, env, template)
    for name, raw in overrides.items():
        values[name] = _coerce(name, raw, known[name])
    return DEFAULT_CONFIG.replace(**values)


def parse_overrides(items: list[str] | None) -> dict[str, str]:
    """Turns ``["exact_cap=12", ...]`` into a dict for ``load_config``."""
    result: dict[str, str] = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"expected KEY=VALUE, got {item!r}", item=item)
        result[key.strip().replace("-", "_")] = value
    return result
