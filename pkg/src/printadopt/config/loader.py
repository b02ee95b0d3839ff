"""Load and validate YAML configuration files."""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, ValidationError

from printadopt.common.exceptions import ConfigError, InputError, OutputError
from printadopt.config.models import (
    AppSettings,
    InstanceConfig,
    ProductConfig,
    TabulatedDemandConfig,
    UniformDemandConfig,
)
from printadopt.game.demand import TabulatedDemand, UniformDemand
from printadopt.game.models import Instance, Product

DEFAULT_CONFIG_DIR = Path(__file__).parent.parent.parent.parent / "config"
INSTANCES_DIR = DEFAULT_CONFIG_DIR / "instances"


def load_instance(config_path: str | Path) -> Instance:
    """Load an instance file and enforce the model invariants."""
    path = Path(config_path)
    data = _read_yaml(path)
    config = _validate(InstanceConfig, data, path)
    try:
        return instance_from_config(config)
    except ConfigError as e:
        raise ConfigError(f"{path}: {e}") from e


def instance_from_config(config: InstanceConfig) -> Instance:
    products = []
    for i, item in enumerate(config.products):
        try:
            products.append(_product_from_config(item))
        except ConfigError as e:
            raise ConfigError(f"products.{i}: {e}") from e
    return Instance(products=tuple(products), K=config.K, Q=config.Q)


def instance_to_config(inst: Instance, name: str = "", description: str = "") -> InstanceConfig:
    products = []
    for p in inst.products:
        if isinstance(p.demand, UniformDemand):
            demand = UniformDemandConfig(upper=p.demand.upper)
        else:
            demand = TabulatedDemandConfig(knots=[tuple(k) for k in p.demand.knots])
        products.append(ProductConfig(name=p.name, r=p.r, c_m=p.c_m, c_p=p.c_p, demand=demand))
    return InstanceConfig(name=name, description=description, K=inst.K, Q=inst.Q, products=products)


def save_instance(inst: Instance, config_path: str | Path, name: str = "") -> None:
    """Write ``inst`` as canonical YAML."""
    path = Path(config_path)
    data = instance_to_config(inst, name=name).model_dump(mode="json")
    try:
        with open(path, "w", encoding="utf-8") as f:
            yaml.safe_dump(data, f, sort_keys=False)
    except OSError as e:
        raise OutputError(str(path), e) from e


def load_settings(settings_path: str | Path | None = None) -> AppSettings:
    """Load application settings from YAML file."""
    path = Path(settings_path) if settings_path else DEFAULT_CONFIG_DIR / "settings.yaml"
    if not path.exists():
        return AppSettings()
    data = _read_yaml(path) or {}
    return _validate(AppSettings, data, path)


def _product_from_config(item: ProductConfig) -> Product:
    if isinstance(item.demand, UniformDemandConfig):
        demand = UniformDemand(upper=item.demand.upper)
    else:
        demand = TabulatedDemand(knots=tuple(tuple(k) for k in item.demand.knots))
    return Product(r=item.r, c_m=item.c_m, c_p=item.c_p, demand=demand, name=item.name)


def _read_yaml(path: Path):
    try:
        with open(path, encoding="utf-8") as f:
            return yaml.safe_load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"Config file not found: {path}") from e
    except UnicodeDecodeError as e:
        raise ConfigError(f"{path}: not valid UTF-8 text ({e.reason} at byte {e.start})") from e
    except OSError as e:
        raise InputError(str(path), e) from e
    except yaml.YAMLError as e:
        raise ConfigError(f"{path}: YAML parse error: {e}") from e


def _validate(model: type[BaseModel], data, path: Path):
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at top level")
    try:
        return model(**data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise ConfigError(f"{path}: {field}: {first['msg']}") from e
