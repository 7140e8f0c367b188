"""Physical constants, parameter records and the derived wavenumbers shared by all models.

Units throughout: energies in eV, potentials in volts, lengths in nm (or whatever
``PhysicalConstants.length_unit`` says), wavenumbers in inverse length units.
The kinetic factor 2 m e / hbar^2 is the only place where SI units are converted.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass
from typing import Mapping, Optional

from .errors import ConfigError, DomainError

ENV_CONSTANTS = "NANOLOOP_CONSTANTS"


@dataclass(frozen=True)
class PhysicalConstants:
    electron_mass: float = 9.1093837015e-31  # kg
    hbar: float = 1.054571817e-34  # J s
    electron_charge: float = 1.602176634e-19  # C
    length_unit: float = 1e-9  # metres per length unit

    _KEYS = {
        "electron_mass_kg": "electron_mass",
        "hbar_js": "hbar",
        "electron_charge_c": "electron_charge",
        "length_unit_m": "length_unit",
    }

    def __post_init__(self):
        for name in ("electron_mass", "hbar", "electron_charge", "length_unit"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"constant {name} must be a positive finite number, got {value!r}")

    @property
    def kinetic_factor(self) -> float:
        """2 m e / hbar^2 in (length unit)^-2 eV^-1."""
        return 2.0 * self.electron_mass * self.electron_charge / self.hbar**2 * self.length_unit**2

    def to_dict(self) -> dict:
        fields = asdict(self)
        return {key: fields[attr] for key, attr in self._KEYS.items()}

    @classmethod
    def from_mapping(cls, data: Mapping) -> "PhysicalConstants":
        """Build from the JSON ``"constants"`` block; missing keys keep CODATA 2018 values."""
        if "constants" in data and isinstance(data["constants"], Mapping):
            data = data["constants"]
        unknown = set(data) - set(cls._KEYS)
        if unknown:
            raise ConfigError(f"unknown constants keys: {sorted(unknown)}")
        kwargs = {}
        for key, value in data.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"constant {key} must be a number, got {value!r}")
            kwargs[cls._KEYS[key]] = float(value)
        try:
            return cls(**kwargs)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc


CODATA_2018 = PhysicalConstants()

# Picometre length unit: the wavenumber scale at which the reference Theta
# statistics and b(t) extrema are reproduced (see README, "Reference numbers").
PICOMETRE_UNITS = PhysicalConstants(length_unit=1e-12)


def load_constants(path) -> PhysicalConstants:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise ConfigError(f"cannot read constants file {path}: {exc}") from exc
    if not isinstance(data, Mapping):
        raise ConfigError(f"{path}: constants file must hold a JSON object")
    return PhysicalConstants.from_mapping(data)


def constants_from_env(environ: Optional[Mapping] = None) -> PhysicalConstants:
    """CODATA 2018 unless ``NANOLOOP_CONSTANTS`` names an override file."""
    environ = os.environ if environ is None else environ
    path = environ.get(ENV_CONSTANTS)
    return load_constants(path) if path else CODATA_2018


def _finite(name, value):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class RectParams:
    """Rectangular-barrier inputs. ``a`` is the (non-positive) left edge of the pre-barrier."""

    a: float
    b: float
    E: float
    V0: float

    def __post_init__(self):
        for name in ("a", "b", "E", "V0"):
            _finite(name, getattr(self, name))
        if self.a > 0:
            raise DomainError(f"pre-barrier coordinate a must be <= 0, got {self.a}")
        if self.b < 0:
            raise DomainError(f"barrier length b must be >= 0, got {self.b}")
        if self.E <= 0 or self.V0 <= 0:
            raise DomainError("E and V0 must be positive")


@dataclass(frozen=True)
class TriParams:
    """Triangular-barrier inputs; ``a`` may be omitted when Theta is the unknown."""

    E: float
    V0: float
    c: float
    a: Optional[float] = None

    def __post_init__(self):
        for name in ("E", "V0", "c"):
            _finite(name, getattr(self, name))
        if self.a is not None:
            _finite("a", self.a)
            if self.a >= 0:
                raise DomainError(f"pre-barrier coordinate a must be < 0, got {self.a}")
        if self.c <= 0:
            raise DomainError(f"barrier length c must be > 0, got {self.c}")
        if self.E <= 0 or self.V0 <= 0:
            raise DomainError("E and V0 must be positive")


@dataclass(frozen=True)
class DerivedParameters:
    k: float
    beta: Optional[float] = None
    gamma: Optional[float] = None
    K: Optional[float] = None
    X: Optional[float] = None
    R: Optional[float] = None
    Theta: Optional[float] = None


def derive_rect(params: RectParams, constants: PhysicalConstants = CODATA_2018) -> DerivedParameters:
    if not 0 < params.E < params.V0:
        raise DomainError(f"need 0 < E < V0 for tunneling, got E={params.E}, V0={params.V0}")
    kf = constants.kinetic_factor
    k = math.sqrt(kf * params.E)
    beta = math.sqrt(kf * (params.V0 - params.E))
    return DerivedParameters(k=k, beta=beta, Theta=k * params.a)


def derive_tri(params: TriParams, constants: PhysicalConstants = CODATA_2018) -> DerivedParameters:
    E, V0, c = params.E, params.V0, params.c
    if not 0 < E < V0:
        raise DomainError(f"need 0 < E < V0 for tunneling, got E={E}, V0={V0}")
    kf = constants.kinetic_factor
    k = math.sqrt(kf * E)
    gamma = (kf * V0 / c) ** (1.0 / 3.0)
    gc = gamma * c
    K = -(1.0 - E / V0) * gc
    X = gc * E / V0
    theta = None if params.a is None else k * params.a
    return DerivedParameters(k=k, gamma=gamma, K=K, X=X, R=gamma / k, Theta=theta)


def tunneling_length(E: float, V0: float, c: float) -> float:
    """Length of the classically forbidden part of a triangular barrier."""
    if c <= 0 or V0 <= 0:
        raise DomainError("c and V0 must be positive")
    if not 0 <= E <= V0:
        raise DomainError(f"need 0 <= E <= V0, got E={E}, V0={V0}")
    return (1.0 - E / V0) * c


def potential_from_gamma(gamma: float, c: float, constants: PhysicalConstants = CODATA_2018) -> float:
    """Invert the Airy scale: V0 = gamma^3 c / kinetic_factor."""
    if not (gamma > 0 and c > 0):
        raise DomainError(f"gamma and c must be positive, got gamma={gamma}, c={c}")
    return gamma**3 * c / constants.kinetic_factor
