"""Runtime layers with analytic forward/backward passes.

Every layer caches what its backward pass needs during forward.  The
gradient conventions are plain reverse-mode: backward receives dL/dout
and returns dL/din while accumulating dL/dparam into .grads_ arrays.
All arithmetic is float64.
"""

from __future__ import annotations

import numpy as np

from . import specs


class ShapeMismatch(ValueError):
    pass


class ShapeUnderflow(ValueError):
    pass


class DegenerateBatch(ValueError):
    pass


def _relu(x):
    return np.maximum(x, 0.0)


def _glorot(rng, shape, fan_in, fan_out):
    lim = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-lim, lim, size=shape)


class Layer:
    spec: object
    params_: list
    grads_: list
    trainable: list  # bools aligned with params_

    def forward(self, x, train: bool):
        raise NotImplementedError

    def backward(self, grad):
        raise NotImplementedError

    def zero_grads(self):
        for g in self.grads_:
            g[...] = 0.0

    def param_count(self) -> tuple[int, int]:
        total = sum(p.size for p in self.params_)
        train = sum(p.size for p, t in zip(self.params_, self.trainable) if t)
        return total, train


class DenseLayer(Layer):
    def __init__(self, spec: specs.Dense, rng):
        self.spec = spec
        W = _glorot(rng, (spec.n_out, spec.n_in), spec.n_in, spec.n_out)
        b = np.zeros(spec.n_out)
        self.params_ = [W, b]
        self.grads_ = [np.zeros_like(W), np.zeros_like(b)]
        self.trainable = [True, True]

    def forward(self, x, train):
        if x.ndim != 2 or x.shape[1] != self.spec.n_in:
            raise ShapeMismatch(f"dense expects (batch, {self.spec.n_in})")
        self._x = x
        z = x @ self.params_[0].T + self.params_[1]
        self._z = z
        return _relu(z) if self.spec.activation == "relu" else z

    def backward(self, grad):
        if self.spec.activation == "relu":
            grad = grad * (self._z > 0)
        self.grads_[0] += grad.T @ self._x
        self.grads_[1] += grad.sum(axis=0)
        return grad @ self.params_[0]


class Conv1DLayer(Layer):
    """Strided 1-D cross-correlation with per-filter bias and activation.

    Input (batch, n, C), output (batch, n', F) with
    n' = (n - K + 2P)/S + 1; raises ShapeMismatch unless S | (n - K + 2P).
    """

    def __init__(self, spec: specs.Conv1D, rng):
        self.spec = spec
        K, C, F = spec.kernel, spec.channels_in, spec.filters
        W = _glorot(rng, (F, K, C), K * C, F)
        b = np.zeros(F)
        self.params_ = [W, b]
        self.grads_ = [np.zeros_like(W), np.zeros_like(b)]
        self.trainable = [True, True]

    def forward(self, x, train):
        s = self.spec
        if x.ndim == 2:
            x = x[:, :, None]
        if x.shape[2] != s.channels_in:
            raise ShapeMismatch(
                f"conv expects {s.channels_in} channels, got {x.shape[2]}"
            )
        B, n, C = x.shape
        span = n - s.kernel + 2 * s.padding
        if span < 0 or span % s.stride:
            raise ShapeMismatch(
                f"length {n} incompatible with K={s.kernel} S={s.stride} P={s.padding}"
            )
        if s.padding:
            xp = np.zeros((B, n + 2 * s.padding, C))
            xp[:, s.padding : s.padding + n] = x
        else:
            xp = x
        self._xp_shape = xp.shape
        win = np.lib.stride_tricks.sliding_window_view(xp, s.kernel, axis=1)
        win = win[:, :: s.stride]  # (B, n', C, K)
        nprime = win.shape[1]
        cols = win.transpose(0, 1, 3, 2).reshape(B, nprime, s.kernel * C)
        self._cols = cols
        Wm = self.params_[0].reshape(s.filters, s.kernel * C)
        z = cols @ Wm.T + self.params_[1]
        self._z = z
        return _relu(z) if s.activation == "relu" else z

    def backward(self, grad):
        s = self.spec
        if s.activation == "relu":
            grad = grad * (self._z > 0)
        B, nprime, F = grad.shape
        K, C = s.kernel, s.channels_in
        gmat = grad.reshape(-1, F)
        self.grads_[0] += (
            gmat.T @ self._cols.reshape(-1, K * C)
        ).reshape(F, K, C)
        self.grads_[1] += gmat.sum(axis=0)
        Wm = self.params_[0].reshape(F, K * C)
        dcols = (grad @ Wm).reshape(B, nprime, K, C)
        dxp = np.zeros(self._xp_shape)
        for k in range(K):
            idx = np.arange(nprime) * s.stride + k
            np.add.at(dxp, (slice(None), idx), dcols[:, :, k])
        if s.padding:
            dxp = dxp[:, s.padding : -s.padding or None]
        return dxp


class AvgPoolLayer(Layer):
    def __init__(self, spec: specs.AvgPool, rng=None):
        self.spec = spec
        self.params_, self.grads_, self.trainable = [], [], []

    def forward(self, x, train):
        M = self.spec.size
        B, n, C = x.shape
        out_len = n // M
        if out_len == 0:
            raise ShapeUnderflow(f"pool size {M} exhausts length {n}")
        self._in_len = n
        core = x[:, : out_len * M].reshape(B, out_len, M, C)
        return core.mean(axis=2)

    def backward(self, grad):
        M = self.spec.size
        B, out_len, C = grad.shape
        dx = np.zeros((B, self._in_len, C))
        dx[:, : out_len * M] = np.repeat(grad / M, M, axis=1)
        return dx


class BatchNormLayer(Layer):
    """gamma (x - mu)/sqrt(var + eps) + beta over the last axis' channels.

    Batch statistics (biased variance) in train mode with running updates;
    frozen running statistics in inference mode.
    """

    def __init__(self, spec: specs.BatchNorm, rng=None):
        self.spec = spec
        C = spec.channels
        gamma, beta = np.ones(C), np.zeros(C)
        rmean, rvar = np.zeros(C), np.ones(C)
        self.params_ = [gamma, beta, rmean, rvar]
        self.grads_ = [np.zeros(C), np.zeros(C), np.zeros(C), np.zeros(C)]
        self.trainable = [True, True, False, False]

    def forward(self, x, train):
        axes = tuple(range(x.ndim - 1))
        gamma, beta, rmean, rvar = self.params_
        if train:
            m = int(np.prod([x.shape[a] for a in axes]))
            if m < 2:
                raise DegenerateBatch("batch statistics need >= 2 values")
            mu = x.mean(axis=axes)
            var = x.var(axis=axes)
            mom = self.spec.momentum
            rmean[...] = mom * rmean + (1.0 - mom) * mu
            rvar[...] = mom * rvar + (1.0 - mom) * var
        else:
            mu, var = rmean, rvar
        inv = 1.0 / np.sqrt(var + self.spec.eps)
        xhat = (x - mu) * inv
        self._train = train
        self._xhat, self._inv, self._axes = xhat, inv, axes
        return gamma * xhat + beta

    def backward(self, grad):
        gamma = self.params_[0]
        axes = self._axes
        self.grads_[0] += (grad * self._xhat).sum(axis=axes)
        self.grads_[1] += grad.sum(axis=axes)
        if not self._train:
            return grad * gamma * self._inv
        m = np.prod([grad.shape[a] for a in axes])
        g = grad * gamma
        mean_g = g.mean(axis=axes)
        mean_gx = (g * self._xhat).mean(axis=axes)
        return self._inv * (g - mean_g - self._xhat * mean_gx)


class DropoutLayer(Layer):
    def __init__(self, spec: specs.Dropout, rng):
        self.spec = spec
        self._rng = rng
        self.params_, self.grads_, self.trainable = [], [], []
        self.active = True

    def forward(self, x, train):
        q = self.spec.rate
        if not train or q == 0.0 or not self.active:
            self._mask = None
            return x
        self._mask = (self._rng.random(x.shape) >= q) / (1.0 - q)
        return x * self._mask

    def backward(self, grad):
        return grad if self._mask is None else grad * self._mask


class GRULayer(Layer):
    """Gated recurrent unit over scalar sequences; returns the final
    hidden state and keeps the whole trajectory for inspection."""

    def __init__(self, spec: specs.GRU, rng, d_in: int = 1):
        self.spec = spec
        U = spec.units
        lim = np.sqrt(6.0 / (U + d_in))
        limu = np.sqrt(6.0 / (2 * U))
        self.params_ = [
            rng.uniform(-lim, lim, (U, d_in)),   # Wz
            rng.uniform(-limu, limu, (U, U)),    # Uz
            np.zeros(U),                         # bz
            rng.uniform(-lim, lim, (U, d_in)),   # Wr
            rng.uniform(-limu, limu, (U, U)),    # Ur
            np.zeros(U),                         # br
            rng.uniform(-lim, lim, (U, d_in)),   # Wh
            rng.uniform(-limu, limu, (U, U)),    # Uh
            np.zeros(U),                         # bh
        ]
        self.grads_ = [np.zeros_like(p) for p in self.params_]
        self.trainable = [True] * 9

    def forward(self, x, train):
        if x.ndim == 2:
            x = x[:, :, None]
        B, T, d = x.shape
        Wz, Uz, bz, Wr, Ur, br, Wh, Uh, bh = self.params_
        h = np.zeros((B, self.spec.units))
        self._steps = []
        traj = np.empty((B, T, self.spec.units))
        for t in range(T):
            xt = x[:, t]
            z = _sigmoid(xt @ Wz.T + h @ Uz.T + bz)
            r = _sigmoid(xt @ Wr.T + h @ Ur.T + br)
            hhat = np.tanh(xt @ Wh.T + (r * h) @ Uh.T + bh)
            hnew = (1.0 - z) * h + z * hhat
            self._steps.append((xt, h, z, r, hhat))
            h = hnew
            traj[:, t] = h
        self.trajectory = traj
        return h

    def backward(self, grad):
        Wz, Uz, bz, Wr, Ur, br, Wh, Uh, bh = self.params_
        gWz, gUz, gbz, gWr, gUr, gbr, gWh, gUh, gbh = self.grads_
        dh = grad
        B = grad.shape[0]
        T = len(self._steps)
        dx = np.empty((B, T, Wz.shape[1]))
        for t in range(T - 1, -1, -1):
            xt, hprev, z, r, hhat = self._steps[t]
            dz = dh * (hhat - hprev)
            dhhat = dh * z
            dhprev = dh * (1.0 - z)
            da_h = dhhat * (1.0 - hhat * hhat)
            gWh += da_h.T @ xt
            gUh += da_h.T @ (r * hprev)
            gbh += da_h.sum(axis=0)
            drh = da_h @ Uh
            dr = drh * hprev
            dhprev = dhprev + drh * r
            da_z = dz * z * (1.0 - z)
            gWz += da_z.T @ xt
            gUz += da_z.T @ hprev
            gbz += da_z.sum(axis=0)
            dhprev = dhprev + da_z @ Uz
            da_r = dr * r * (1.0 - r)
            gWr += da_r.T @ xt
            gUr += da_r.T @ hprev
            gbr += da_r.sum(axis=0)
            dhprev = dhprev + da_r @ Ur
            dx[:, t] = da_z @ Wz + da_r @ Wr + da_h @ Wh
            dh = dhprev
        return dx


class FlattenLayer(Layer):
    def __init__(self, spec=None, rng=None):
        self.spec = spec or specs.Flatten()
        self.params_, self.grads_, self.trainable = [], [], []

    def forward(self, x, train):
        self._shape = x.shape
        return x.reshape(x.shape[0], -1)

    def backward(self, grad):
        return grad.reshape(self._shape)


class SoftmaxLayer(Layer):
    def __init__(self, spec=None, rng=None):
        self.spec = spec or specs.Softmax()
        self.params_, self.grads_, self.trainable = [], [], []

    def forward(self, x, train):
        z = x - x.max(axis=1, keepdims=True)
        e = np.exp(z)
        self._p = e / e.sum(axis=1, keepdims=True)
        return self._p

    def backward(self, grad):
        p = self._p
        dot = (grad * p).sum(axis=1, keepdims=True)
        return p * (grad - dot)


def _sigmoid(x):
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


LAYER_BUILDERS = {
    "dense": DenseLayer,
    "conv1d": Conv1DLayer,
    "avgpool": AvgPoolLayer,
    "batchnorm": BatchNormLayer,
    "dropout": DropoutLayer,
    "gru": GRULayer,
    "flatten": FlattenLayer,
    "softmax": SoftmaxLayer,
}
