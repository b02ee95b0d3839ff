"""Instance files and application settings."""

from __future__ import annotations

import pytest

from printadopt.common.exceptions import ConfigError, InputError, OutputError
from printadopt.config.loader import load_instance, load_settings, save_instance
from printadopt.config.models import AppSettings
from printadopt.game.demand import TabulatedDemand
from printadopt.game.models import Case
from printadopt.game.solver import equilibrium
from tests.conftest import INSTANCES_DIR, small_instance

SHIPPED = sorted(INSTANCES_DIR.glob("*.yaml"))

VALID = """\
K: 10
Q: 8
products:
  - r: 10
    c_m: 5
    c_p: 1
    demand: {kind: uniform, upper: 10}
  - r: 20
    c_m: 10
    c_p: 5
    demand: {kind: uniform, upper: 15}
"""


def _write(tmp_path, text: str, name: str = "instance.yaml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


class TestShippedInstances:
    def test_all_present(self):
        assert {p.stem for p in SHIPPED} >= {
            "two_product_small", "two_product_offset", "two_product_demand_growth",
            "two_product_price_map", "three_product", "tabulated_demand",
        }

    @pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.stem)
    def test_loads_and_solves(self, path):
        inst = load_instance(path)
        sol = equilibrium(inst)
        assert sol.n == inst.n
        assert sol.case in set(Case)

    @pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.stem)
    def test_round_trip(self, path, tmp_path):
        inst = load_instance(path)
        out = tmp_path / path.name
        save_instance(inst, out, name=path.stem)
        assert load_instance(out) == inst

    def test_small_instance_values(self):
        inst = load_instance(INSTANCES_DIR / "two_product_small.yaml")
        expected = small_instance()
        assert (inst.K, inst.Q) == (expected.K, expected.Q)
        for got, want in zip(inst.products, expected.products):
            assert (got.r, got.c_m, got.c_p, got.demand) == (want.r, want.c_m, want.c_p, want.demand)
        assert inst.products[0].name == "product-1"
        sol = equilibrium(inst)
        assert sol.case is Case.CAPACITY_BOUND
        assert sol.pi_M == pytest.approx(349.0 / 7.0)

    def test_offset_instance(self):
        sol = equilibrium(load_instance(INSTANCES_DIR / "two_product_offset.yaml"))
        assert sol.case is Case.UNCONSTRAINED
        assert sol.pi_M == pytest.approx(2503.5)

    def test_three_product_instance(self):
        sol = equilibrium(load_instance(INSTANCES_DIR / "three_product.yaml"))
        assert sol.case is Case.CAPACITY_BOUND
        assert sol.shadow_price == pytest.approx(1.0, abs=1e-6)

    def test_tabulated_instance(self):
        inst = load_instance(INSTANCES_DIR / "tabulated_demand.yaml")
        assert isinstance(inst.products[1].demand, TabulatedDemand)
        assert inst.products[1].demand.mean == pytest.approx(55.0)


class TestInstanceErrors:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            load_instance(tmp_path / "nope.yaml")

    def test_bad_yaml(self, tmp_path):
        with pytest.raises(ConfigError, match="YAML"):
            load_instance(_write(tmp_path, "K: [1, 2\n"))

    def test_not_a_mapping(self, tmp_path):
        with pytest.raises(ConfigError, match="mapping"):
            load_instance(_write(tmp_path, "- 1\n- 2\n"))

    def test_missing_field(self, tmp_path):
        with pytest.raises(ConfigError, match=r"products\.0\.r"):
            load_instance(_write(tmp_path, VALID.replace("  - r: 10\n", "  - name: x\n")))

    def test_unknown_demand_kind(self, tmp_path):
        with pytest.raises(ConfigError):
            load_instance(_write(tmp_path, VALID.replace("kind: uniform, upper: 15", "kind: normal, upper: 15")))

    def test_no_products(self, tmp_path):
        with pytest.raises(ConfigError):
            load_instance(_write(tmp_path, "K: 1\nQ: 1\nproducts: []\n"))

    def test_model_invariant(self, tmp_path):
        with pytest.raises(ConfigError, match=r"products\.1"):
            load_instance(_write(tmp_path, VALID.replace("c_m: 10", "c_m: 25")))

    def test_negative_capacity(self, tmp_path):
        with pytest.raises(ConfigError, match="capacity"):
            load_instance(_write(tmp_path, VALID.replace("Q: 8", "Q: -8")))

    def test_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin.yaml"
        path.write_bytes(b"K: 1\n\xff\xfe: 2\n")
        with pytest.raises(ConfigError, match="UTF-8"):
            load_instance(path)

    def test_unreadable_path(self, tmp_path):
        with pytest.raises(InputError) as info:
            load_instance(tmp_path)
        assert info.value.exit_code == 3
        assert "Cannot read" in str(info.value)

    def test_save_to_missing_directory(self, tmp_path):
        with pytest.raises(OutputError):
            save_instance(small_instance(), tmp_path / "missing" / "x.yaml")


class TestSettings:
    def test_shipped_settings(self):
        settings = load_settings()
        assert settings.oracle.grid_n == 400
        assert settings.oracle.mc_samples == 1_000_000
        assert settings.sweep.boundary_tol == pytest.approx(1e-6)

    def test_missing_file_gives_defaults(self, tmp_path):
        assert load_settings(tmp_path / "none.yaml") == AppSettings()

    def test_empty_file_gives_defaults(self, tmp_path):
        assert load_settings(_write(tmp_path, "", "settings.yaml")) == AppSettings()

    def test_partial_file(self, tmp_path):
        settings = load_settings(_write(tmp_path, "oracle:\n  seed: 7\n", "settings.yaml"))
        assert settings.oracle.seed == 7
        assert settings.oracle.grid_n == 400

    def test_unreadable_path(self, tmp_path):
        with pytest.raises(InputError):
            load_settings(tmp_path)

    def test_invalid_value(self, tmp_path):
        with pytest.raises(ConfigError, match=r"oracle\.grid_n"):
            load_settings(_write(tmp_path, "oracle:\n  grid_n: 5\n", "settings.yaml"))
