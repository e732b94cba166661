"""Independent reference implementations the tests check the package against.

These are deliberately written as direct transcriptions of the definitions
(straight arithmetic, exhaustive enumeration) and must not import from the
package's implementation modules.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence


def burden_oracle(
    annual_kwh: float,
    electricity_rate: float,
    annual_therms: float,
    heating_rate: float,
    median_income: float,
) -> float:
    return (annual_kwh * electricity_rate + annual_therms * heating_rate) / median_income * 100


def pearson_oracle(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    n = len(x)
    if min(x) == max(x) or min(y) == max(y):
        return None
    mean_x = math.fsum(x) / n
    mean_y = math.fsum(y) / n
    num = math.fsum((a - mean_x) * (b - mean_y) for a, b in zip(x, y))
    den = math.sqrt(
        math.fsum((a - mean_x) ** 2 for a in x) * math.fsum((b - mean_y) ** 2 for b in y)
    )
    r = num / den
    return min(1.0, max(-1.0, r))


def variance_oracle(values: Sequence[float]) -> float:
    vals = [float(v) for v in values]
    if min(vals) == max(vals):
        return 0.0
    mean = math.fsum(vals) / len(vals)
    return math.fsum((v - mean) ** 2 for v in vals) / len(vals)


def enumerate_best_split(X, y, min_samples_leaf: int):
    """Exhaustively score every (feature, midpoint) candidate.

    Returns (feature_index, threshold, decrease) for the winner under the
    documented tie-break (max decrease, then lowest feature index, then
    lowest threshold), or None when no candidate is valid. The decrease is
    parent variance minus the sum of the sample-weighted child variances,
    clamped at zero.
    """
    n = len(y)
    best = None
    for j in range(X.shape[1]):
        distinct = sorted(set(float(v) for v in X[:, j]))
        for lo, hi in zip(distinct, distinct[1:]):
            threshold = (lo + hi) / 2.0
            left = [i for i in range(n) if X[i, j] <= threshold]
            right = [i for i in range(n) if X[i, j] > threshold]
            if len(left) < min_samples_leaf or len(right) < min_samples_leaf:
                continue
            decrease = variance_oracle(y) - (
                (len(left) / n) * variance_oracle([y[i] for i in left])
                + (len(right) / n) * variance_oracle([y[i] for i in right])
            )
            if decrease < 0.0:
                decrease = 0.0
            if best is None or decrease > best[2]:
                best = (j, threshold, decrease)
    return best


def r_squared_oracle(predicted: Sequence[float], actual: Sequence[float]) -> float:
    mean = math.fsum(actual) / len(actual)
    ss_res = math.fsum((a - p) ** 2 for p, a in zip(predicted, actual))
    ss_tot = math.fsum((a - mean) ** 2 for a in actual)
    return 1.0 - ss_res / ss_tot


def rmse_oracle(predicted: Sequence[float], actual: Sequence[float]) -> float:
    return math.sqrt(
        math.fsum((a - p) ** 2 for p, a in zip(predicted, actual)) / len(actual)
    )
