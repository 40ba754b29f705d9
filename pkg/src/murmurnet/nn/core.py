"""Model assembly, the training loop, and checkpoint serialization.

Training minimizes categorical cross-entropy on the pre-softmax scores
with minibatch Adam under an optional triangular cyclic learning rate.
Everything is driven by explicit seeds: parameter initialization comes
from the ModelSpec seed, batch order and dropout masks from the
TrainConfig seed, so a rerun is bit-identical.
"""

from __future__ import annotations

import base64
import json
from dataclasses import dataclass, field

import numpy as np

from . import layers as L
from . import specs


class Diverged(ArithmeticError):
    pass


class Model:
    """A stack of runtime layers built from a ModelSpec."""

    def __init__(self, spec: specs.ModelSpec, rng_seed: int | None = None):
        self.spec = spec
        self.rng = np.random.default_rng(
            spec.seed if rng_seed is None else rng_seed
        )
        self.layers = []
        for ls in spec.layers:
            builder = L.LAYER_BUILDERS[ls.kind]
            self.layers.append(builder(ls, self.rng))

    # -- plumbing

    def params(self) -> list[np.ndarray]:
        return [p for lay in self.layers for p in lay.params_]

    def trainable_mask(self) -> list[bool]:
        return [t for lay in self.layers for t in lay.trainable]

    def grads(self) -> list[np.ndarray]:
        return [g for lay in self.layers for g in lay.grads_]

    def zero_grads(self):
        for lay in self.layers:
            lay.zero_grads()

    def parameter_counts(self) -> tuple[int, int]:
        """(total, trainable) parameter counts."""
        tot = tr = 0
        for lay in self.layers:
            a, b = lay.param_count()
            tot += a
            tr += b
        return tot, tr

    # -- passes

    def forward(self, x, train: bool = False):
        for lay in self.layers:
            x = lay.forward(x, train)
        return x

    def scores(self, x, train: bool = False):
        """Forward pass stopping before a trailing Softmax layer."""
        stack = self.layers
        if stack and isinstance(stack[-1], L.SoftmaxLayer):
            stack = stack[:-1]
        for lay in stack:
            x = lay.forward(x, train)
        return x

    def backward_from_scores(self, dscores):
        stack = self.layers
        if stack and isinstance(stack[-1], L.SoftmaxLayer):
            stack = stack[:-1]
        g = dscores
        for lay in reversed(stack):
            g = lay.backward(g)
        return g

    def predict(self, x):
        return np.argmax(self.scores(x, train=False), axis=1)

    # -- checkpoints

    CHECKPOINT_VERSION = 1

    def save_checkpoint(self, path):
        blob = {
            "version": self.CHECKPOINT_VERSION,
            "spec": self.spec.to_dict(),
            "params": [
                {
                    "shape": list(p.shape),
                    "data": base64.b64encode(np.ascontiguousarray(p).tobytes()).decode(),
                }
                for p in self.params()
            ],
        }
        with open(path, "w") as fh:
            json.dump(blob, fh)

    @classmethod
    def load_checkpoint(cls, path) -> "Model":
        with open(path) as fh:
            blob = json.load(fh)
        if blob.get("version") != cls.CHECKPOINT_VERSION:
            raise ValueError(f"unsupported checkpoint version {blob.get('version')}")
        model = cls(specs.ModelSpec.from_dict(blob["spec"]))
        params = model.params()
        if len(params) != len(blob["params"]):
            raise ValueError("checkpoint/parameter mismatch")
        for p, rec in zip(params, blob["params"]):
            arr = np.frombuffer(
                base64.b64decode(rec["data"]), dtype=np.float64
            ).reshape(rec["shape"])
            p[...] = arr
        return model


def cross_entropy(scores: np.ndarray, labels: np.ndarray) -> float:
    """Mean over the batch of -log softmax-probability of the true class."""
    z = scores - scores.max(axis=1, keepdims=True)
    logZ = np.log(np.exp(z).sum(axis=1))
    return float(np.mean(logZ - z[np.arange(len(labels)), labels]))


def cross_entropy_grad(scores: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """d(cross_entropy)/d(scores) = (softmax - onehot) / batch."""
    z = scores - scores.max(axis=1, keepdims=True)
    e = np.exp(z)
    p = e / e.sum(axis=1, keepdims=True)
    p[np.arange(len(labels)), labels] -= 1.0
    return p / len(labels)


@dataclass
class AdamState:
    m: list = field(default_factory=list)
    v: list = field(default_factory=list)
    t: int = 0


def adam_step(
    params: list[np.ndarray],
    grads: list[np.ndarray],
    state: AdamState,
    lr: float,
    beta1: float = 0.9,
    beta2: float = 0.999,
    eps: float = 1e-8,
) -> AdamState:
    """One canonical bias-corrected Adam update, in place."""
    if not state.m:
        state.m = [np.zeros_like(p) for p in params]
        state.v = [np.zeros_like(p) for p in params]
    state.t += 1
    b1t = 1.0 - beta1**state.t
    b2t = 1.0 - beta2**state.t
    for p, g, m, v in zip(params, grads, state.m, state.v):
        m[...] = beta1 * m + (1.0 - beta1) * g
        v[...] = beta2 * v + (1.0 - beta2) * g * g
        p -= lr * (m / b1t) / (np.sqrt(v / b2t) + eps)
    return state


def cyclic_lr(step: int, base: float, peak: float, cycle_len: int) -> float:
    """Triangular wave: base -> peak over half a cycle, back over the rest."""
    if cycle_len < 2:
        return peak
    phase = step % cycle_len
    half = cycle_len / 2.0
    frac = phase / half if phase <= half else (cycle_len - phase) / half
    return base + (peak - base) * frac


@dataclass
class TrainHistory:
    loss: list
    accuracy: list


def train_arrays(
    spec: specs.ModelSpec,
    X: np.ndarray,
    y: np.ndarray,
    config: specs.TrainConfig,
) -> tuple[Model, TrainHistory]:
    """Minibatch Adam training; returns the trained model and per-epoch
    train loss/accuracy.  Raises Diverged on a non-finite loss."""
    model = Model(spec)
    if not config.dropout_active:
        for lay in model.layers:
            if isinstance(lay, L.DropoutLayer):
                lay.active = False
    order_rng = np.random.default_rng(config.seed)
    params = model.params()
    mask = model.trainable_mask()
    tparams = [p for p, t in zip(params, mask) if t]
    state = AdamState()
    hist = TrainHistory([], [])
    step = 0
    n = len(X)
    bs = min(config.batch_size, n)
    for epoch in range(config.epochs):
        order = order_rng.permutation(n)
        ep_loss = 0.0
        ep_hits = 0
        for start in range(0, n - bs + 1, bs):
            idx = order[start : start + bs]
            xb, yb = X[idx], y[idx]
            model.zero_grads()
            scores = model.scores(xb, train=True)
            loss = cross_entropy(scores, yb)
            if not np.isfinite(loss):
                raise Diverged(f"loss became {loss} at epoch {epoch}")
            model.backward_from_scores(cross_entropy_grad(scores, yb))
            if config.schedule == "cyclic":
                lr = cyclic_lr(step, config.lr_base, config.lr_max, config.cycle_len)
            else:
                lr = config.lr_base
            grads = model.grads()
            tgrads = [g for g, t in zip(grads, mask) if t]
            adam_step(
                tparams, tgrads, state, lr, config.beta1, config.beta2, config.eps_adam
            )
            step += 1
            ep_loss += loss * len(idx)
            ep_hits += int((np.argmax(scores, axis=1) == yb).sum())
        seen = (n // bs) * bs
        hist.loss.append(ep_loss / max(seen, 1))
        hist.accuracy.append(ep_hits / max(seen, 1))
    return model, hist


def evaluate_arrays(model: Model, X: np.ndarray, y: np.ndarray) -> float:
    """Argmax-class accuracy; np.argmax keeps the lowest index on ties."""
    if len(X) == 0:
        raise ValueError("empty evaluation set")
    return float(np.mean(model.predict(X) == y))


def dump_filters(model: Model) -> dict:
    """Conv kernels plus batch-norm and dense parameters, for plotting."""
    out: dict = {"conv": [], "batchnorm": [], "dense": []}
    for lay in model.layers:
        if isinstance(lay, L.Conv1DLayer):
            W, b = lay.params_
            out["conv"].append(
                {"kernels": W.copy(), "bias": b.copy()}
            )
        elif isinstance(lay, L.BatchNormLayer):
            g, bta, rm, rv = lay.params_
            out["batchnorm"].append(
                {"gamma": g.copy(), "beta": bta.copy(), "mean": rm.copy(), "var": rv.copy()}
            )
        elif isinstance(lay, L.DenseLayer):
            W, b = lay.params_
            out["dense"].append({"weights": W.copy(), "bias": b.copy()})
    if not out["conv"] and not any(
        isinstance(lay, L.GRULayer) for lay in model.layers
    ):
        raise ValueError("model has no convolutional layer to dump")
    return out
