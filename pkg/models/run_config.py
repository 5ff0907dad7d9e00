import copy
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config import Config
from models.surface_code import SurfaceCodeParams
from utils.errors import DimensionError, ParameterError, ValidationError

STATE_KINDS = ('gaussian', 'random', 'file', 'basis')
OBSERVABLE_KINDS = ('phi_power', 'file', 'identity')


@dataclass
class StateSpec:
    """Which wavefunction to build"""
    kind: str = 'gaussian'
    mu: Optional[float] = None
    sigma: Optional[float] = None
    seed: Optional[int] = None
    path: Optional[str] = None
    index: int = 0

    def validate(self) -> None:
        if self.kind not in STATE_KINDS:
            raise ParameterError(f"Unknown state kind {self.kind!r}; choose one of {', '.join(STATE_KINDS)}")
        if self.kind == 'file' and not self.path:
            raise ParameterError("State kind 'file' needs --state-file")
        if self.kind != 'file' and self.path:
            raise ParameterError(f"--state-file given but the state kind is {self.kind!r}")
        if self.kind == 'gaussian' and self.sigma is not None and not self.sigma > 0:
            raise ParameterError(f"--sigma must be positive, got {self.sigma}")

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'mu': self.mu,
            'sigma': self.sigma,
            'seed': self.seed,
            'path': self.path,
            'index': self.index
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'StateSpec':
        return cls(
            kind=data.get('kind', 'gaussian'),
            mu=data.get('mu'),
            sigma=data.get('sigma'),
            seed=data.get('seed'),
            path=data.get('path'),
            index=data.get('index', 0)
        )


@dataclass
class ObservableSpec:
    """Which diagonal observable to measure"""
    kind: str = 'phi_power'
    power: int = 2
    path: Optional[str] = None

    def validate(self) -> None:
        if self.kind not in OBSERVABLE_KINDS:
            raise ParameterError(
                f"Unknown observable kind {self.kind!r}; choose one of {', '.join(OBSERVABLE_KINDS)}"
            )
        if self.kind == 'file' and not self.path:
            raise ParameterError("Observable kind 'file' needs --observable-file")
        if self.kind != 'file' and self.path:
            raise ParameterError(f"--observable-file given but the observable kind is {self.kind!r}")
        if self.kind == 'phi_power' and (int(self.power) != self.power or self.power < 1):
            raise ParameterError(f"--power must be a positive integer, got {self.power}")

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'power': self.power, 'path': self.path}

    @classmethod
    def from_dict(cls, data: dict) -> 'ObservableSpec':
        return cls(kind=data.get('kind', 'phi_power'), power=data.get('power', 2), path=data.get('path'))


@dataclass
class RunConfig:
    """Everything one CLI run needs: register, state, observable, noise, code and output"""
    n: Optional[int] = None
    state: StateSpec = field(default_factory=StateSpec)
    observable: ObservableSpec = field(default_factory=ObservableSpec)
    eta: Optional[List[float]] = None
    surface_code: Dict[str, Any] = field(default_factory=dict)
    gammas_ir_first: Optional[List[float]] = None
    format: str = 'json'
    output: Optional[str] = None

    def validate(self) -> 'RunConfig':
        """Check each spec and the register size they imply"""
        self.state.validate()
        self.observable.validate()
        if self.format not in Config.OUTPUT_FORMATS:
            raise ParameterError(f"Unknown format {self.format!r}; choose one of {', '.join(Config.OUTPUT_FORMATS)}")
        if self.n is not None:
            if isinstance(self.n, bool) or int(self.n) != self.n or not 1 <= self.n <= Config.MAX_QUBITS:
                raise DimensionError(f"n must be an integer in 1..{Config.MAX_QUBITS}, got {self.n}")
            self.n = int(self.n)
        if self.gammas_ir_first is not None:
            if not self.gammas_ir_first:
                raise ParameterError("--gammas-ir-first needs at least one value")
            if self.n is not None and len(self.gammas_ir_first) != self.n:
                raise DimensionError(f"{len(self.gammas_ir_first)} sensitivities given but n = {self.n}")
        if self.eta is not None and self.n is not None and len(self.eta) != self.n:
            raise DimensionError(f"{len(self.eta)} noise rates given but n = {self.n}")
        return self

    def register_size(self) -> int:
        """n, falling back to the length of a given sensitivity listing"""
        if self.n is not None:
            return self.n
        if self.gammas_ir_first is not None:
            return len(self.gammas_ir_first)
        raise ParameterError("The register size is unknown; pass --n")

    def code_params(self) -> SurfaceCodeParams:
        values = dict(self.surface_code)
        eps_per_cycle = values.pop('eps_per_cycle', None)
        try:
            if eps_per_cycle is not None:
                return SurfaceCodeParams.per_cycle(eps_per_cycle, **values)
            return SurfaceCodeParams(**values)
        except TypeError as e:
            raise ValidationError(f"Bad surface_code section: {e}") from e

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'state': self.state.to_dict(),
            'observable': self.observable.to_dict(),
            'eta': self.eta,
            'surface_code': dict(self.surface_code),
            'gammas_ir_first': self.gammas_ir_first,
            'format': self.format,
            'output': self.output
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'RunConfig':
        unknown = set(data) - {'n', 'state', 'observable', 'eta', 'surface_code', 'gammas_ir_first',
                               'format', 'output'}
        if unknown:
            raise ValidationError(f"Unknown config keys: {', '.join(sorted(unknown))}")
        return cls(
            n=data.get('n'),
            state=StateSpec.from_dict(data.get('state') or {}),
            observable=ObservableSpec.from_dict(data.get('observable') or {}),
            eta=data.get('eta'),
            surface_code=dict(data.get('surface_code') or {}),
            gammas_ir_first=data.get('gammas_ir_first'),
            format=data.get('format', 'json'),
            output=data.get('output')
        )

    @classmethod
    def from_sources(cls, document: Optional[dict], overrides: Dict[str, Any]) -> 'RunConfig':
        """Merge a config document with command-line values; flags win, None means not given"""
        merged = copy.deepcopy(document or {})
        for dotted, value in overrides.items():
            if value is None:
                continue
            target = merged
            *parents, leaf = dotted.split('.')
            for parent in parents:
                target = target.setdefault(parent, {})
            target[leaf] = value
        # a state file on the command line implies the file kind unless --state says otherwise
        if overrides.get('state.path') is not None and overrides.get('state.kind') is None:
            merged['state']['kind'] = 'file'
        if overrides.get('observable.path') is not None and overrides.get('observable.kind') is None:
            merged['observable']['kind'] = 'file'
        # --eps-per-cycle replaces any epsilon / n_cycles pair from the document
        code = merged.setdefault('surface_code', {})
        if overrides.get('surface_code.eps_per_cycle') is not None:
            code.pop('epsilon', None)
            code.pop('n_cycles', None)
        elif overrides.get('surface_code.epsilon') is not None or overrides.get('surface_code.n_cycles') is not None:
            code.pop('eps_per_cycle', None)
        return cls.from_dict(merged).validate()
