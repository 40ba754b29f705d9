"""Declarative layer and model specifications.

A ModelSpec is an ordered list of layer specs plus the class count and an
initialization seed; runtime layers are built from it in model.py.  Specs
serialize to plain dicts for the versioned JSON checkpoint format.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict


@dataclass(frozen=True)
class Dense:
    n_in: int
    n_out: int
    activation: str = "linear"  # linear | relu

    kind: str = field(default="dense", init=False)


@dataclass(frozen=True)
class Conv1D:
    filters: int
    kernel: int
    stride: int = 1
    padding: int = 0
    activation: str = "relu"
    channels_in: int = 1

    kind: str = field(default="conv1d", init=False)

    def __post_init__(self):
        if self.filters < 1 or self.kernel < 1 or self.stride < 1 or self.padding < 0:
            raise ValueError("invalid Conv1D geometry")


@dataclass(frozen=True)
class AvgPool:
    size: int

    kind: str = field(default="avgpool", init=False)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("pool size must be >= 1")


@dataclass(frozen=True)
class BatchNorm:
    channels: int
    eps: float = 1e-3
    momentum: float = 0.99

    kind: str = field(default="batchnorm", init=False)


@dataclass(frozen=True)
class Dropout:
    rate: float

    kind: str = field(default="dropout", init=False)

    def __post_init__(self):
        if not 0.0 <= self.rate < 1.0:
            raise ValueError("dropout rate must lie in [0, 1)")


@dataclass(frozen=True)
class GRU:
    units: int

    kind: str = field(default="gru", init=False)


@dataclass(frozen=True)
class Flatten:
    kind: str = field(default="flatten", init=False)


@dataclass(frozen=True)
class Softmax:
    kind: str = field(default="softmax", init=False)


LAYER_KINDS = {
    "dense": Dense,
    "conv1d": Conv1D,
    "avgpool": AvgPool,
    "batchnorm": BatchNorm,
    "dropout": Dropout,
    "gru": GRU,
    "flatten": Flatten,
    "softmax": Softmax,
}


@dataclass(frozen=True)
class ModelSpec:
    layers: tuple
    classes: int
    seed: int = 0

    def __post_init__(self):
        if self.classes not in (2, 4):
            raise ValueError("classes must be 2 or 4")

    def to_dict(self) -> dict:
        return {
            "layers": [asdict(l) for l in self.layers],
            "classes": self.classes,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ModelSpec":
        layers = []
        for ld in d["layers"]:
            ld = dict(ld)
            kind = ld.pop("kind")
            layers.append(LAYER_KINDS[kind](**ld))
        return cls(tuple(layers), d["classes"], d["seed"])


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 100
    batch_size: int = 64
    beta1: float = 0.9
    beta2: float = 0.999
    eps_adam: float = 1e-8
    schedule: str = "cyclic"  # constant | cyclic
    lr_base: float = 1e-4
    lr_max: float = 1e-2
    cycle_len: int = 200
    dropout_active: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.epochs < 1:
            raise ValueError("epochs >= 1 required")
        if not 0 < self.lr_base <= self.lr_max:
            raise ValueError("need 0 < lr_base <= lr_max")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "TrainConfig":
        return cls(**d)
