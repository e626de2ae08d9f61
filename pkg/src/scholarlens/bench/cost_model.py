"""Affine cost model for the stuff-everything baseline.

A naive pipeline that pastes n records into the prompt costs
n * mean_record_tokens + prompt_overhead tokens. The default model is
calibrated so 50 records cost exactly 5,934 tokens with a 200-token
prompt overhead, i.e. 114.68 tokens per record.
"""

from __future__ import annotations

from dataclasses import dataclass

CALIBRATION_RECORD_COUNT = 50
CALIBRATION_NAIVE_TOKENS = 5934
CALIBRATION_PROMPT_OVERHEAD = 200


@dataclass(frozen=True)
class NaiveCostModel:
    mean_record_tokens: float
    prompt_overhead: int = 0

    def __post_init__(self) -> None:
        if self.mean_record_tokens <= 0:
            raise ValueError("mean_record_tokens must be positive")
        if self.prompt_overhead < 0:
            raise ValueError("prompt_overhead must be >= 0")


DEFAULT_NAIVE_MODEL = NaiveCostModel(
    mean_record_tokens=(CALIBRATION_NAIVE_TOKENS - CALIBRATION_PROMPT_OVERHEAD)
    / CALIBRATION_RECORD_COUNT,
    prompt_overhead=CALIBRATION_PROMPT_OVERHEAD,
)


def naive_cost(n: int, model: NaiveCostModel = DEFAULT_NAIVE_MODEL) -> float:
    """Token cost of prompting with n raw records under the affine model."""
    if n < 0:
        raise ValueError("record count must be >= 0")
    return n * model.mean_record_tokens + model.prompt_overhead


def compute_savings(res_mean: float, naive_mean: float) -> float:
    """Fraction of baseline tokens avoided; negative if the baseline wins."""
    if naive_mean <= 0:
        raise ValueError("naive_mean must be positive")
    return (naive_mean - res_mean) / naive_mean
