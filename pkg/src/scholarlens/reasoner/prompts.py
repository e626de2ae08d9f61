"""Fixed prompt text for plan extraction.

The system prompt is a module constant: every invocation in a process pays
the same prompt cost, which is what makes the per-run token total a
function of the question alone.
"""

from __future__ import annotations

from scholarlens.core.types import PromptSpec, UserQuery

REASONER_SYSTEM_PROMPT = (
    "You convert an analytical question about scholarly publications into a "
    "JSON query plan. Reply with a single JSON object and nothing else: no "
    "prose, no code fences. Choose the single best intent. Never invent "
    "subjects that are not in the question. You have no access to any data; "
    "you only plan the query."
)

PLAN_SCHEMA_INSTRUCTIONS = (
    "Produce JSON with this shape:\n"
    '{"intent": "trend"|"comparison"|"ranking"|"statistics",\n'
    ' "subjects": [1..5 short topic strings],\n'
    ' "time_range": {"from_year": int, "until_year": int}  (optional),\n'
    ' "top_n": int 1..20  (ranking only, optional),\n'
    ' "rank_dimension": "venue"|"publisher"|"work_type"  (ranking only, optional)}\n'
    "Rules: trend needs a time_range when years are mentioned; comparison "
    "needs at least two subjects; from_year <= until_year."
)


def build_reasoner_prompt(query: UserQuery) -> PromptSpec:
    user_content = f"Question: {query.text}\n\n{PLAN_SCHEMA_INSTRUCTIONS}"
    return PromptSpec(
        system_prompt=REASONER_SYSTEM_PROMPT,
        user_content=user_content,
        tag="reasoner",
    )
