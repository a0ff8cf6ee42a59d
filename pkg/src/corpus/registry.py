"""
Corpus registry for loading named number fields from YAML configuration.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml

from src.config import get_settings
from src.exact.polynomials import IntPolynomial
from src.fields.number_field import NumberField

logger = logging.getLogger(__name__)

_DEFAULT_FIELDS = {
    "Q": (0, 1),
    "Qi": (1, 0, 1),
    "Qsqrt2": (-2, 0, 1),
    "golden": (-1, -1, 1),
    "cubic": (-1, -1, 0, 1),
    "lehmer": (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1),
}


@dataclass
class FieldConfig:
    """Configuration for a named corpus field."""

    id: str
    name: str
    coefficients: tuple[int, ...]
    description: str = ""
    product_formula_suite: bool = False

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.coefficients)


@dataclass
class CorpusRegistry:
    """Registry of named number fields."""

    path: Optional[Path] = None
    default_field: str = "Q"
    _fields: dict[str, FieldConfig] = field(default_factory=dict)
    _instances: dict[str, NumberField] = field(default_factory=dict)

    def __post_init__(self):
        self._load_from_yaml()

    def _config_paths(self) -> list[Path]:
        paths = []
        if self.path is not None:
            paths.append(Path(self.path))
        configured = get_settings().corpus_path
        if configured:
            paths.append(Path(configured))
        paths += [
            Path("config/corpus.yaml"),
            Path(__file__).parent.parent.parent / "config" / "corpus.yaml",
        ]
        return paths

    def _load_from_yaml(self) -> None:
        config_path = next((p for p in self._config_paths() if p.exists()), None)
        if config_path is None:
            logger.warning("CORPUS_DEFAULTS | reason=no corpus.yaml found")
            for field_id, coeffs in _DEFAULT_FIELDS.items():
                self._fields[field_id] = FieldConfig(
                    field_id, field_id, coeffs, product_formula_suite=True
                )
            return

        with open(config_path) as f:
            config = yaml.safe_load(f) or {}

        self.default_field = config.get("default_field", "Q")
        for data in config.get("fields", []):
            entry = FieldConfig(
                id=data["id"],
                name=data.get("name", data["id"]),
                coefficients=tuple(int(c) for c in data["coefficients"]),
                description=data.get("description", ""),
                product_formula_suite=data.get("product_formula_suite", False),
            )
            self._fields[entry.id] = entry
        logger.debug(f"CORPUS_LOADED | path={config_path} | fields={len(self._fields)}")

    def get_config(self, field_id: str) -> Optional[FieldConfig]:
        return self._fields.get(field_id)

    def get_field(self, field_id: str) -> NumberField:
        """
        The corpus field `field_id`, constructed once per registry.

        Raises:
            KeyError: If no field has that id.
        """
        if field_id in self._instances:
            return self._instances[field_id]
        config = self._fields.get(field_id)
        if config is None:
            raise KeyError(f"unknown corpus field {field_id!r}; known: {', '.join(self._fields)}")
        if config.coefficients == (0, 1):
            instance = NumberField.rationals()
        else:
            instance = NumberField(config.polynomial, name=config.id)
        self._instances[field_id] = instance
        return instance

    def list_fields(self) -> list[FieldConfig]:
        return list(self._fields.values())

    def product_formula_fields(self) -> list[FieldConfig]:
        return [f for f in self._fields.values() if f.product_formula_suite]

    def get_default_field(self) -> NumberField:
        return self.get_field(self.default_field)


@lru_cache
def get_corpus_registry() -> CorpusRegistry:
    """Get singleton corpus registry instance."""
    return CorpusRegistry()


def get_field(field_id: str) -> NumberField:
    return get_corpus_registry().get_field(field_id)
