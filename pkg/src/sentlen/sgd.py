"""Linear regression trained by stochastic gradient descent.

The loss is the epsilon-insensitive squared error max(0, |y - p| - eps)^2:
small residuals cost nothing, larger ones cost quadratically.  L1
regularization uses cumulative-penalty clipping: the total penalty every
weight *should* have received so far is tracked globally, each weight
remembers how much it has actually absorbed, and the difference is applied
whenever the weight's feature is touched, clipping at zero rather than
crossing it.  That is what produces exact zeros on sparse data without
penalizing untouched features early.  The intercept is never regularized.

Training is sequential by design; a fixed seed fixes the visit order and
therefore every float in the fitted model.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import TrainingError
from .features import SparseVector

Example = tuple[SparseVector, float]


@dataclass(frozen=True)
class TrainConfig:
    epsilon: float = 0.1
    alpha: float = 0.001
    max_epochs: int = 2000
    eta0: float = 0.01
    power_t: float = 0.25
    early_stop_patience: int = 5
    early_stop_tol: float = 1e-3
    seed: int = 0

    def validate(self) -> None:
        if not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise TrainingError("epsilon must be finite and >= 0")
        if not math.isfinite(self.alpha) or self.alpha < 0:
            raise TrainingError("alpha must be finite and >= 0")
        if self.max_epochs < 1:
            raise TrainingError("max_epochs must be at least 1")
        if not math.isfinite(self.eta0) or self.eta0 <= 0:
            raise TrainingError("eta0 must be finite and > 0")
        if not math.isfinite(self.power_t) or self.power_t < 0:
            raise TrainingError("power_t must be finite and >= 0")
        if self.early_stop_patience < 1:
            raise TrainingError("early_stop_patience must be at least 1")
        if not math.isfinite(self.early_stop_tol) or self.early_stop_tol < 0:
            raise TrainingError("early_stop_tol must be finite and >= 0")


@dataclass(frozen=True, eq=False)
class LinearModel:
    weights: np.ndarray
    intercept: float
    config: TrainConfig
    epochs_run: int
    stopped_early: bool

    @property
    def dimension(self) -> int:
        return int(self.weights.shape[0])


@dataclass(frozen=True)
class EvalMetrics:
    mae: float
    r_squared: float
    n: int


def _check_finite(y: float, p: float, epsilon: float) -> None:
    if not (math.isfinite(y) and math.isfinite(p) and math.isfinite(epsilon)):
        raise ValueError(f"non-finite loss inputs: y={y!r}, p={p!r}, epsilon={epsilon!r}")


def loss(y: float, p: float, epsilon: float) -> float:
    """max(0, |y - p| - epsilon)^2."""
    _check_finite(y, p, epsilon)
    gap = abs(y - p) - epsilon
    return gap * gap if gap > 0.0 else 0.0


def loss_gradient(y: float, p: float, epsilon: float) -> float:
    """d loss / d p: zero inside the tube, 2*(|y-p|-epsilon)*sign(p-y) outside."""
    _check_finite(y, p, epsilon)
    gap = abs(y - p) - epsilon
    if gap <= 0.0:
        return 0.0
    return 2.0 * gap if p > y else -2.0 * gap


@dataclass(frozen=True)
class _Compiled:
    idx: np.ndarray
    vals: np.ndarray
    y: float


def _compile(dataset: Sequence[Example], dim: int, name: str) -> list[_Compiled]:
    out = []
    for pos, (vec, y) in enumerate(dataset):
        if vec.dimension != dim:
            raise TrainingError(
                f"{name} example {pos} has dimension {vec.dimension}, expected {dim}"
            )
        idx = np.fromiter(vec.entries.keys(), dtype=np.int64, count=len(vec.entries))
        vals = np.fromiter(vec.entries.values(), dtype=np.float64, count=len(vec.entries))
        if not math.isfinite(y):
            raise TrainingError(f"{name} example {pos} has a non-finite label {y!r}")
        if idx.size and not np.isfinite(vals).all():
            raise TrainingError(f"{name} example {pos} has non-finite feature values")
        out.append(_Compiled(idx=idx, vals=vals, y=float(y)))
    return out


def _clip_toward_zero(
    weights: np.ndarray, applied: np.ndarray, idx: np.ndarray, budget: float
) -> None:
    # Budget is the penalty every weight should have absorbed by now;
    # applied[i] is what weight i actually has.  Clip at zero, never across.
    w = weights[idx]
    a = applied[idx]
    clipped = np.where(
        w > 0.0,
        np.maximum(0.0, w - (budget + a)),
        np.where(w < 0.0, np.minimum(0.0, w + (budget - a)), w),
    )
    applied[idx] = a + (clipped - w)
    weights[idx] = clipped


def _mean_abs_error(
    weights: np.ndarray, intercept: float, examples: list[_Compiled]
) -> float:
    total = 0.0
    for ex in examples:
        pred = float(weights[ex.idx] @ ex.vals) + intercept if ex.idx.size else intercept
        total += abs(ex.y - pred)
    return total / len(examples)


def train(
    train_set: Sequence[Example],
    val_set: Sequence[Example],
    dim: int,
    config: TrainConfig,
) -> LinearModel:
    """Fit from zero-initialized weights.

    Learning rate at update t (counted from 1 across epochs) is
    eta0 / t**power_t.  After every epoch the validation MAE is measured;
    if it fails to improve by early_stop_tol for early_stop_patience
    consecutive epochs, training stops.  The returned weights are always
    the ones from the best validation epoch.
    """
    config.validate()
    if not len(train_set) or not len(val_set):
        raise TrainingError("training and validation sets must both be non-empty")
    if dim < 1:
        raise TrainingError("dimension must be at least 1")
    train_ex = _compile(train_set, dim, "training")
    val_ex = _compile(val_set, dim, "validation")

    weights = np.zeros(dim)
    intercept = 0.0
    penalty_budget = 0.0
    penalty_applied = np.zeros(dim)
    rng = random.Random(config.seed)
    order = list(range(len(train_ex)))

    eta0 = config.eta0
    power_t = config.power_t
    epsilon = config.epsilon
    alpha = config.alpha

    best_mae = math.inf
    best_weights = weights.copy()
    best_intercept = 0.0
    bad_epochs = 0
    stopped_early = False
    epochs_run = 0
    t = 0

    for epoch in range(1, config.max_epochs + 1):
        rng.shuffle(order)
        # A diverging run produces inf/nan mid-epoch; the finite check below
        # is the guard, so numpy's intermediate warnings are noise here.
        with np.errstate(over="ignore", invalid="ignore"):
            for i in order:
                ex = train_ex[i]
                t += 1
                eta = eta0 / t**power_t
                if ex.idx.size:
                    pred = float(weights[ex.idx] @ ex.vals) + intercept
                else:
                    pred = intercept
                gap = abs(ex.y - pred) - epsilon
                if gap > 0.0:
                    g = 2.0 * gap if pred > ex.y else -2.0 * gap
                    if ex.idx.size:
                        weights[ex.idx] -= eta * g * ex.vals
                    intercept -= eta * g
                if alpha > 0.0:
                    penalty_budget += eta * alpha
                    if ex.idx.size:
                        _clip_toward_zero(
                            weights, penalty_applied, ex.idx, penalty_budget
                        )
        epochs_run = epoch
        if not (np.isfinite(weights).all() and math.isfinite(intercept)):
            raise TrainingError(
                f"training diverged at epoch {epoch}: non-finite weights"
                " (try a smaller eta0)"
            )
        val_mae = _mean_abs_error(weights, intercept, val_ex)
        if val_mae > best_mae - config.early_stop_tol:
            bad_epochs += 1
        else:
            bad_epochs = 0
        if val_mae < best_mae:
            best_mae = val_mae
            best_weights = weights.copy()
            best_intercept = intercept
        if bad_epochs >= config.early_stop_patience:
            stopped_early = True
            break

    return LinearModel(
        weights=best_weights,
        intercept=best_intercept,
        config=config,
        epochs_run=epochs_run,
        stopped_early=stopped_early,
    )


def predict(model: LinearModel, x: SparseVector) -> float:
    if x.dimension != model.dimension:
        raise ValueError(
            f"dimension mismatch: vector has {x.dimension}, model has {model.dimension}"
        )
    total = model.intercept
    for i, v in x.entries.items():
        total += model.weights[i] * v
    return float(total)


def evaluate(model: LinearModel, data: Sequence[Example]) -> EvalMetrics:
    """MAE and R^2 over a dataset.

    When the targets have no variance R^2 has no usual definition: it is 1
    if every residual is zero, else -inf as an "undefined" sentinel.
    """
    pairs = list(data)
    if not pairs:
        raise ValueError("cannot evaluate on an empty dataset")
    y = np.array([target for _, target in pairs], dtype=float)
    preds = np.array([predict(model, vec) for vec, _ in pairs], dtype=float)
    resid = y - preds
    mae = float(np.mean(np.abs(resid)))
    rss = float(np.sum(resid**2))
    tss = float(np.sum((y - y.mean()) ** 2))
    if tss == 0.0:
        r_squared = 1.0 if rss == 0.0 else float("-inf")
    else:
        r_squared = 1.0 - rss / tss
    return EvalMetrics(mae=mae, r_squared=r_squared, n=len(pairs))
