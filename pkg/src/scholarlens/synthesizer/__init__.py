"""Layer 3: statistical summary to narrative and chart.

The only inputs on this layer's surface are the summary and a provider
handle; there is no way to hand it raw records.
"""

from scholarlens.synthesizer.charts import build_chart_config
from scholarlens.synthesizer.llm import (
    SYNTHESIZER_SYSTEM_PROMPT,
    build_synthesizer_prompt,
    synthesize,
)
from scholarlens.synthesizer.templates import template_narrative

__all__ = [
    "SYNTHESIZER_SYSTEM_PROMPT",
    "build_chart_config",
    "build_synthesizer_prompt",
    "synthesize",
    "template_narrative",
]
