"""Layer 1: natural-language question to validated query plan.

This layer never touches a data source: nothing in here imports or accepts
one, which is what keeps plan construction's token cost independent of
corpus size.
"""

from scholarlens.reasoner.grammar import rule_based_parse
from scholarlens.reasoner.llm import parse_query
from scholarlens.reasoner.plan_json import validate_plan_json
from scholarlens.reasoner.prompts import REASONER_SYSTEM_PROMPT, build_reasoner_prompt

__all__ = [
    "REASONER_SYSTEM_PROMPT",
    "build_reasoner_prompt",
    "parse_query",
    "rule_based_parse",
    "validate_plan_json",
]
