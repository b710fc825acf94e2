"""Configuration management for the clique laboratory."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import dotenv_values

from .errors import ConfigError
from .graph import OrderingPolicy
from .search import DEFAULT_ORACLE_LIMIT, Inheritance, SearchConfig, Variant

DEFAULT_CONFIG_FILE = "cliquelab.env"

ORDER_NAMES = {"natural": OrderingPolicy.NATURAL, "degree": OrderingPolicy.DEGREE_DESC}


def parse_order(name: str) -> OrderingPolicy:
    """Accept the CLI spelling (``degree``) as well as the policy value."""
    if name in ORDER_NAMES:
        return ORDER_NAMES[name]
    try:
        return OrderingPolicy(name)
    except ValueError:
        raise ConfigError(f"unknown ordering {name!r}; use natural or degree") from None


def _parse_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None


class ConfigManager:
    """Load solver defaults from a ``KEY=value`` file.

    Only the file is consulted; the process environment is left alone.
    """

    def __init__(self, config_file: Optional[Path] = None) -> None:
        self.config_file = Path(config_file or DEFAULT_CONFIG_FILE).expanduser()
        self._values: Dict[str, Optional[str]] = {}
        if self.config_file.exists():
            self._values = dict(dotenv_values(self.config_file))

    def _get(self, key: str) -> Optional[str]:
        value = self._values.get(key)
        return value.strip() if value else None

    def get_config(self) -> Dict[str, Any]:
        """Return current configuration values (raw strings resolved to defaults)."""
        return {
            "order": self._get("CLIQUELAB_ORDER") or "natural",
            "variant": self._get("CLIQUELAB_VARIANT"),
            "threads": self._get("CLIQUELAB_THREADS") or "1",
            "oracle_limit": self._get("CLIQUELAB_ORACLE_LIMIT") or str(DEFAULT_ORACLE_LIMIT),
            "inheritance": self._get("CLIQUELAB_INHERITANCE") or Inheritance.COLOUR_CLASS.value,
            "log_file": self._get("CLIQUELAB_LOG_FILE"),
        }

    def search_config(
        self,
        *,
        variant: Optional[str] = None,
        order: Optional[str] = None,
        threads: Optional[int] = None,
        oracle_limit: Optional[int] = None,
        inheritance: Optional[str] = None,
    ) -> SearchConfig:
        """Build a validated :class:`SearchConfig`; explicit arguments win over the file."""
        config = self.get_config()
        variant_name = variant or config["variant"]
        try:
            return SearchConfig(
                variant=Variant(variant_name) if variant_name else None,
                ordering_policy=parse_order(order or config["order"]),
                threads=threads
                if threads is not None
                else _parse_int("CLIQUELAB_THREADS", config["threads"]),
                oracle_limit=oracle_limit
                if oracle_limit is not None
                else _parse_int("CLIQUELAB_ORACLE_LIMIT", config["oracle_limit"]),
                inheritance=Inheritance(inheritance or config["inheritance"]),
            )
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def log_file(self) -> Optional[Path]:
        raw = self.get_config()["log_file"]
        return Path(raw).expanduser() if raw else None

    def validate_config(self) -> bool:
        try:
            self.search_config()
        except ConfigError:
            return False
        return True

    def setup_env_file(
        self,
        order: Optional[str] = None,
        variant: Optional[str] = None,
        threads: Optional[int] = None,
        oracle_limit: Optional[int] = None,
        log_file: Optional[str] = None,
    ) -> SearchConfig:
        """Write the configuration file after validating the values."""
        current = self.get_config()
        values = {
            "CLIQUELAB_ORDER": order or current["order"],
            "CLIQUELAB_VARIANT": variant or current["variant"] or "",
            "CLIQUELAB_THREADS": str(threads) if threads is not None else current["threads"],
            "CLIQUELAB_ORACLE_LIMIT": (
                str(oracle_limit) if oracle_limit is not None else current["oracle_limit"]
            ),
            "CLIQUELAB_INHERITANCE": current["inheritance"],
            "CLIQUELAB_LOG_FILE": log_file or current["log_file"] or "",
        }
        self._values = dict(values)
        cfg = self.search_config()

        content = "# cliquelab configuration\n# Generated by cliquelab init\n\n" + "".join(
            f"{key}={value}\n" for key, value in values.items()
        )
        self.config_file.parent.mkdir(parents=True, exist_ok=True)
        self.config_file.write_text(content)
        return cfg

    def get_config_summary(self) -> str:
        """Return a human-readable configuration summary."""
        config = self.get_config()
        status = "valid" if self.validate_config() else "INVALID"
        return (
            f"cliquelab configuration ({status})\n"
            f"- Ordering: {config['order']}\n"
            f"- Variant: {config['variant'] or 'auto (baseline sequential, inherited parallel)'}\n"
            f"- Threads: {config['threads']}\n"
            f"- Oracle limit: {config['oracle_limit']}\n"
            f"- Inheritance: {config['inheritance']}\n"
            f"- Log file: {config['log_file'] or 'not set'}\n"
            f"- Config file: {self.config_file} "
            f"(present: {self.config_file.exists()})"
        )
