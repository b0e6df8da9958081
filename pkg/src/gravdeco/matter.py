"""Materials and gas-species catalog, system/environment descriptions, counting helpers.

Molar masses, densities and Debye temperatures not pinned by the benchmark
experiment descriptions are standard handbook values; they only enter
order-of-magnitude comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import DomainError, ResolutionError
from .quantities import CONST, ComplexPermittivity


@dataclass(frozen=True)
class Material:
    name: str
    mass_density: float       # kg/m^3
    debye_temperature: float  # K
    permittivity: ComplexPermittivity
    molar_mass: float         # kg/mol

    def __post_init__(self):
        if self.mass_density <= 0 or self.debye_temperature <= 0 or self.molar_mass <= 0:
            raise DomainError(f"material {self.name!r} has a non-positive parameter")


@dataclass(frozen=True)
class GasSpecies:
    name: str
    molecular_mass: float  # kg per molecule

    def __post_init__(self):
        if self.molecular_mass <= 0:
            raise DomainError(f"gas {self.name!r} requires molecular_mass > 0")


@dataclass(frozen=True)
class GasMixture:
    name: str
    components: tuple[tuple[GasSpecies, float], ...]

    def __post_init__(self):
        if not self.components:
            raise DomainError("gas mixture needs at least one component")
        for _, frac in self.components:
            if not 0 < frac <= 1:
                raise DomainError("mixture fractions must lie in (0, 1]")
        if abs(sum(f for _, f in self.components) - 1.0) > 1e-9:
            raise DomainError("mixture fractions must sum to 1")


@dataclass(frozen=True)
class SystemSpec:
    """The delocalized sphere: geometry, material, internal state and separation."""

    radius: float                # m
    material: Material
    internal_temperature: float  # K
    separation: float            # m
    molecule_count_override: float | None = None  # e.g. single atoms/molecules

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError("radius must be > 0")
        if self.internal_temperature < 0 or self.separation < 0:
            raise DomainError("temperature and separation must be >= 0")


@dataclass(frozen=True)
class Environment:
    photon_temperature: float  # K
    pressure: float            # Pa
    gas: GasMixture
    gas_temperature: float     # K

    def __post_init__(self):
        if self.photon_temperature < 0 or self.gas_temperature < 0 or self.pressure < 0:
            raise DomainError("environment temperatures and pressure must be >= 0")


def molecule_count(radius: float, material: Material) -> float:
    """Number of formula units in a sphere of the given radius."""
    if radius < 0:
        raise DomainError("radius must be >= 0")
    volume = 4.0 / 3.0 * math.pi * radius**3
    return volume * material.mass_density * CONST.N_A / material.molar_mass


def degrees_of_freedom(n_molecules: float) -> float:
    """Oscillator degrees of freedom: three per formula unit."""
    return 3.0 * n_molecules


def gas_number_density(pressure: float, temperature: float) -> float:
    """Ideal-gas number density n = P / (k_B T)."""
    if pressure < 0:
        raise DomainError("pressure must be >= 0")
    if temperature <= 0:
        raise DomainError("gas_number_density requires temperature > 0")
    return pressure / (CONST.k_B * temperature)


# ---------------------------------------------------------------------------
# Built-in catalog

_MATERIALS = {
    # densities/Debye temperatures without a benchmark-pinned value are handbook numbers
    "sapphire": Material("sapphire", 4.0e3, 1047.0, ComplexPermittivity(10.0, 1e-9), 0.10196),
    "fullerene": Material("fullerene", 1.65e3, 185.0, ComplexPermittivity(4.4, 1e-3), 0.72066),
    "rubidium": Material("rubidium", 1.532e3, 56.0, ComplexPermittivity(0.3, 0.1), 0.0854678),
    "niobium": Material("niobium", 8.57e3, 275.0, ComplexPermittivity(41.0, 1e-4), 0.09291),
    "diamond": Material("diamond", 3.515e3, 2230.0, ComplexPermittivity(5.7, 1e-4), 0.01201),
    "silica": Material("silica", 2.2e3, 470.0, ComplexPermittivity(3.9, 1e-3), 0.06008),
}

N2 = GasSpecies("N2", 4.652e-26)
O2 = GasSpecies("O2", 5.314e-26)
AIR = GasMixture("air", ((N2, 0.78), (O2, 0.22)))

_GASES = {"N2": N2, "O2": O2}
_MIXTURES = {
    "air": AIR,
    "N2": GasMixture("N2", ((N2, 1.0),)),
    "O2": GasMixture("O2", ((O2, 1.0),)),
}


@dataclass(frozen=True)
class ExperimentPreset:
    """One benchmark interferometric experiment, reduced to a homogeneous sphere."""

    name: str
    system: SystemSpec
    environment: Environment
    experiment_time: float | None          # s, None for proposals
    reference_decades: dict[str, int] = field(default_factory=dict)
    gravity_model: str = "debye"           # heat-capacity regime used for tau_G
    alt_molecule_count: float | None = None
    notes: str = ""


def _preset(name, material, radius, dx, t_int, t_env, t_gas, pressure, *,
            nm_override=None, alt_nm=None, t_exp=None, decades=None,
            gravity_model="debye", notes=""):
    return ExperimentPreset(
        name=name,
        system=SystemSpec(radius, material, t_int, dx, molecule_count_override=nm_override),
        environment=Environment(t_env, pressure, AIR, t_gas),
        experiment_time=t_exp,
        reference_decades=decades or {},
        gravity_model=gravity_model,
        alt_molecule_count=alt_nm,
        notes=notes,
    )


_PRESETS = {
    "atoms": _preset(
        "atoms", _MATERIALS["rubidium"], 1e-10, 0.54, 1e-9, 300.0, 300.0, 1e-15,
        nm_override=1.0, t_exp=1e-5, decades={"tau_g_debye": 29, "tau_tc": 3},
        notes="single Rb atom; apparatus (photon bath, residual gas) at room temperature",
    ),
    "fullerene": _preset(
        "fullerene", _MATERIALS["fullerene"], 5e-10, 1e-7, 900.0, 300.0, 300.0, 5e-15,
        nm_override=60.0, alt_nm=1.0, t_exp=1e-2,
        decades={"tau_g_debye": 6, "tau_g_einstein": 8, "tau_tc": -1},
        gravity_model="einstein",
        notes="internal temperature above the Debye temperature, so the classical "
              "(Einstein) heat capacity applies; 60 atoms counted as oscillating units "
              "(single-molecule alternative reported alongside)",
    ),
    "micro-particles": _preset(
        "micro-particles", _MATERIALS["niobium"], 1e-6, 5e-7, 0.03, 0.03, 0.03, 1e-15,
        decades={"tau_g_debye": 12, "tau_tc": 0},
    ),
    "diamonds": _preset(
        "diamonds", _MATERIALS["diamond"], 5e-7, 1e-11, 300.0, 300.0, 300.0, 1e-15,
        t_exp=1e-13, decades={"tau_g_debye": 8, "tau_tc": 2},
    ),
    "macro-particles": _preset(
        "macro-particles", _MATERIALS["silica"], 2e-2, 1e-9, 4.0, 4.0, 4.0, 5e-5,
        decades={"tau_g_debye": 3, "tau_tc": -19},
    ),
}


@dataclass(frozen=True)
class Catalog:
    materials: dict[str, Material]
    gases: dict[str, GasSpecies]
    mixtures: dict[str, GasMixture]
    presets: dict[str, ExperimentPreset]

    def material(self, name: str) -> Material:
        try:
            return self.materials[name]
        except KeyError:
            raise ResolutionError("material", name) from None

    def mixture(self, name: str) -> GasMixture:
        try:
            return self.mixtures[name]
        except KeyError:
            raise ResolutionError("gas", name) from None

    def preset(self, name: str) -> ExperimentPreset:
        try:
            return self.presets[name]
        except KeyError:
            raise ResolutionError("preset", name) from None


def builtin_catalog() -> Catalog:
    return Catalog(dict(_MATERIALS), dict(_GASES), dict(_MIXTURES), dict(_PRESETS))


# ---------------------------------------------------------------------------
# External catalog file (TOML): [material.<name>] and [gas.<name>] records may
# extend or override the built-in entries.

def dumps_catalog(catalog: Catalog) -> str:
    """Serialize materials and gases; floats use repr so a reload is bit-exact."""
    lines = []
    for name in sorted(catalog.materials):
        m = catalog.materials[name]
        lines += [
            f"[material.{name}]",
            f"mass_density = {m.mass_density!r}",
            f"debye_temperature = {m.debye_temperature!r}",
            f"eps_re = {m.permittivity.re!r}",
            f"eps_im = {m.permittivity.im!r}",
            f"molar_mass = {m.molar_mass!r}",
            "",
        ]
    for name in sorted(catalog.gases):
        g = catalog.gases[name]
        lines += [f"[gas.{name}]", f"molecular_mass = {g.molecular_mass!r}", ""]
    return "\n".join(lines)


def loads_catalog(text: str, base: Catalog | None = None) -> Catalog:
    """Parse a catalog file, overlaying entries onto `base` (default: built-ins)."""
    base = base or builtin_catalog()
    data = tomllib.loads(text)
    materials = dict(base.materials)
    for name, rec in data.get("material", {}).items():
        materials[name] = Material(
            name=name,
            mass_density=rec["mass_density"],
            debye_temperature=rec["debye_temperature"],
            permittivity=ComplexPermittivity(rec["eps_re"], rec["eps_im"]),
            molar_mass=rec["molar_mass"],
        )
    gases = dict(base.gases)
    for name, rec in data.get("gas", {}).items():
        gases[name] = GasSpecies(name=name, molecular_mass=rec["molecular_mass"])
    mixtures = dict(base.mixtures)
    for name, gas in gases.items():
        mixtures.setdefault(name, GasMixture(name, ((gas, 1.0),)))
    return replace(base, materials=materials, gases=gases, mixtures=mixtures)


def load_catalog_file(path: str) -> Catalog:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_catalog(fh.read())
