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
    TrainConfig,
)
from .layers import DegenerateBatch, ShapeMismatch, ShapeUnderflow
from .core import (
    AdamState,
    Diverged,
    Model,
    TrainHistory,
    adam_step,
    cross_entropy,
    cross_entropy_grad,
    cyclic_lr,
    dump_filters,
    evaluate_arrays,
    train_arrays,
)
from .builders import build_large_cnn, build_small_cnn, build_small_rnn, output_length

__all__ = [
    "AvgPool", "BatchNorm", "Conv1D", "Dense", "Dropout", "Flatten", "GRU",
    "ModelSpec", "Softmax", "TrainConfig", "DegenerateBatch", "ShapeMismatch",
    "ShapeUnderflow", "AdamState", "Diverged", "Model", "TrainHistory",
    "adam_step", "cross_entropy", "cross_entropy_grad", "cyclic_lr",
    "dump_filters", "evaluate_arrays", "train_arrays", "build_large_cnn",
    "build_small_cnn", "build_small_rnn", "output_length",
]
