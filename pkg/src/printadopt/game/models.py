"""Domain records shared by the solvers: products, instances and equilibria."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self), format_spec)

from printadopt.common.exceptions import ConfigError, DomainError
from printadopt.game.demand import DemandModel, UniformDemand


class Case(StrEnum):
    CAPACITY_BOUND = "CapacityBound"
    UNCONSTRAINED = "Unconstrained"
    NO_ADOPTION = "NoAdoption"

    @property
    def number(self) -> int:
        return {Case.CAPACITY_BOUND: 1, Case.UNCONSTRAINED: 2, Case.NO_ADOPTION: 3}[self]

    @property
    def label(self) -> str:
        return f"Case {self.number}"

    @property
    def adopts(self) -> bool:
        return self is not Case.NO_ADOPTION


@dataclass(frozen=True)
class Product:
    """One product: retail price, traditional and print unit costs, demand."""

    r: float
    c_m: float
    c_p: float
    demand: DemandModel
    name: str = ""

    def __post_init__(self) -> None:
        if not self.r > 0:
            raise ConfigError(f"Retail price must be > 0, got r={self.r}")
        if not 0 < self.c_m <= self.r:
            raise ConfigError(f"Need 0 < c_m <= r, got c_m={self.c_m}, r={self.r}")
        if not self.c_p > 0:
            raise ConfigError(f"Print cost must be > 0, got c_p={self.c_p}")

    @property
    def is_uniform(self) -> bool:
        return isinstance(self.demand, UniformDemand)


@dataclass(frozen=True)
class Instance:
    """Products sold to one retailer, plus printer fixed cost K and capacity Q."""

    products: tuple[Product, ...]
    K: float = 0.0
    Q: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "products", tuple(self.products))
        if not self.products:
            raise ConfigError("An instance needs at least one product")
        if self.K < 0:
            raise ConfigError(f"Fixed adoption cost must be >= 0, got K={self.K}")
        if self.Q < 0:
            raise ConfigError(f"Printer capacity must be >= 0, got Q={self.Q}")

    @property
    def n(self) -> int:
        return len(self.products)

    @property
    def all_uniform(self) -> bool:
        return all(p.is_uniform for p in self.products)


@dataclass(frozen=True)
class EquilibriumSolution:
    """Manufacturer's decision (v, w) and the retailer's order q at one regime.

    ``shadow_price`` is the capacity multiplier (0 when capacity is slack);
    ``corner`` marks capacity allocations projected onto a bracket end.
    """

    v: int
    w: tuple[float, ...]
    q: tuple[float, ...]
    case: Case
    pi_M: float
    pi_R: float
    shadow_price: float = 0.0
    corner: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "case", Case(self.case))
        if len(self.w) != len(self.q):
            raise DomainError(f"Got {len(self.w)} prices for {len(self.q)} quantities")
        if self.v != int(self.case.adopts):
            raise DomainError(f"{self.case} needs v={int(self.case.adopts)}, got v={self.v}")
        if self.shadow_price < 0:
            raise DomainError(f"Shadow price must be >= 0, got {self.shadow_price}")
        if self.case is not Case.CAPACITY_BOUND and self.shadow_price != 0:
            raise DomainError(f"{self.case} has slack capacity, got shadow price {self.shadow_price}")

    @property
    def n(self) -> int:
        return len(self.q)

    @property
    def total_quantity(self) -> float:
        return float(sum(self.q))

    def to_dict(self) -> dict:
        data = asdict(self)
        data["case"] = str(self.case)
        data["case_label"] = self.case.label
        data["w"] = list(self.w)
        data["q"] = list(self.q)
        data["notes"] = list(self.notes)
        return data
