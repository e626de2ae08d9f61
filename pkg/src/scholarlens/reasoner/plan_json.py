"""Validation of the plan JSON wire format.

Accepts exactly the shape described in the prompt's schema instructions and
produces a QueryPlan, applying documented defaults: a trend without years
gets the last ten full calendar years; a ranking without top_n gets 10;
a ranking without a dimension ranks venues. Anything else is rejected as
plan_invalid, never silently patched.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from scholarlens.core.errors import PlanInvalidError
from scholarlens.core.types import Intent, QueryPlan, TimeRange, current_year

DEFAULT_TOP_N = 10
DEFAULT_RANK_DIMENSION = "venue"


def _parse_time_range(raw: Any) -> Optional[TimeRange]:
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise PlanInvalidError("time_range must be an object")
    try:
        from_year, until_year = raw["from_year"], raw["until_year"]
    except KeyError as exc:
        raise PlanInvalidError(f"time_range missing {exc.args[0]}") from exc
    if not isinstance(from_year, int) or not isinstance(until_year, int):
        raise PlanInvalidError("time_range years must be integers")
    return TimeRange(from_year, until_year)


def validate_plan_json(text: str) -> QueryPlan:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PlanInvalidError(f"plan is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise PlanInvalidError("plan JSON must be an object")

    try:
        intent = Intent(payload.get("intent"))
    except ValueError:
        raise PlanInvalidError(f"unknown intent {payload.get('intent')!r}") from None

    raw_subjects = payload.get("subjects")
    if not isinstance(raw_subjects, list) or not all(
        isinstance(s, str) for s in raw_subjects
    ):
        raise PlanInvalidError("subjects must be a list of strings")

    time_range = _parse_time_range(payload.get("time_range"))
    top_n = payload.get("top_n")
    rank_dimension = payload.get("rank_dimension")
    if top_n is not None and not isinstance(top_n, int):
        raise PlanInvalidError("top_n must be an integer")
    if rank_dimension is not None and not isinstance(rank_dimension, str):
        raise PlanInvalidError("rank_dimension must be a string")

    if intent is Intent.TREND and time_range is None:
        time_range = TimeRange(current_year() - 10, current_year() - 1)
    if intent is Intent.RANKING:
        top_n = top_n if top_n is not None else DEFAULT_TOP_N
        rank_dimension = rank_dimension or DEFAULT_RANK_DIMENSION

    return QueryPlan(
        intent=intent,
        subjects=tuple(raw_subjects),
        time_range=time_range,
        top_n=top_n,
        rank_dimension=rank_dimension,
    )
