"""The three model families used in the experiments.

Small CNN: one full-width convolution (an ensemble of F dense filters),
batch norm, dropout, and a dense read-out.  Small RNN: a 3-unit GRU over
the bin sequence.  Large CNN: input/reducing/output convolutional blocks,
each conv + average pool + batch norm + dropout, then a dense softmax
head.
"""

from __future__ import annotations

from .layers import ShapeUnderflow, ShapeMismatch
from .specs import (
    AvgPool,
    BatchNorm,
    Conv1D,
    Dense,
    Dropout,
    Flatten,
    GRU,
    ModelSpec,
    Softmax,
)


def build_small_cnn(
    filters: int,
    input_len: int = 64,
    classes: int = 2,
    dropout: float = 0.1,
    seed: int = 0,
) -> ModelSpec:
    """Conv1D(F, K = input length) -> BN -> Dropout -> Dense -> Softmax."""
    if filters not in (1, 2, 3):
        raise ValueError("small CNN uses 1-3 filters")
    layers = (
        Conv1D(filters, kernel=input_len, stride=1, padding=0, activation="relu"),
        BatchNorm(channels=filters),
        Dropout(dropout),
        Flatten(),
        Dense(filters, classes, activation="linear"),
        Softmax(),
    )
    return ModelSpec(layers, classes, seed)


def build_small_rnn(
    units: int = 3, classes: int = 2, dropout: float = 0.2, seed: int = 0
) -> ModelSpec:
    """GRU(units) -> Dropout -> Dense -> Softmax over the bin sequence."""
    layers = (
        GRU(units),
        Dropout(dropout),
        Dense(units, classes, activation="linear"),
        Softmax(),
    )
    return ModelSpec(layers, classes, seed)


def _conv_padding(n: int, K: int, S: int, padded: bool) -> int:
    """Smallest padding meeting the style and the S | (n - K + 2P) contract."""
    P = (K - 1) // 2 if padded else 0
    while (n - K + 2 * P) < 0 or (n - K + 2 * P) % S:
        P += 1
    return P


def build_large_cnn(
    n_input_blocks: int,
    n_reducing_blocks: int,
    n_output_blocks: int,
    filters: int,
    kernel: int,
    pool: int,
    dropout: float,
    input_len: int,
    classes: int = 2,
    padded: bool = True,
    seed: int = 0,
) -> ModelSpec:
    """Stacked convolutional blocks; reducing blocks use stride 2.

    Raises ShapeUnderflow when pooling/striding exhausts the sequence.
    """
    layers = []
    n = input_len
    chan = 1
    strides = (
        [1] * n_input_blocks + [2] * n_reducing_blocks + [1] * n_output_blocks
    )
    for S in strides:
        P = _conv_padding(n, kernel, S, padded)
        layers.append(
            Conv1D(filters, kernel, stride=S, padding=P, activation="relu",
                   channels_in=chan)
        )
        n = (n - kernel + 2 * P) // S + 1
        if n < 1:
            raise ShapeUnderflow("convolution exhausted the sequence")
        if n // pool < 1:
            raise ShapeUnderflow(
                f"pool {pool} exhausts length {n} "
                f"(blocks {n_input_blocks}/{n_reducing_blocks}/{n_output_blocks})"
            )
        layers.append(AvgPool(pool))
        n //= pool
        layers.append(BatchNorm(channels=filters))
        layers.append(Dropout(dropout))
        chan = filters
    layers.append(Flatten())
    layers.append(Dense(n * chan, classes, activation="linear"))
    layers.append(Softmax())
    return ModelSpec(tuple(layers), classes, seed)


def output_length(spec: ModelSpec, input_len: int) -> int:
    """Propagate the sequence length through conv/pool layers."""
    n = input_len
    for ls in spec.layers:
        if ls.kind == "conv1d":
            span = n - ls.kernel + 2 * ls.padding
            if span < 0 or span % ls.stride:
                raise ShapeMismatch("invalid conv geometry")
            n = span // ls.stride + 1
        elif ls.kind == "avgpool":
            n //= ls.size
            if n < 1:
                raise ShapeUnderflow("pooled away")
    return n
