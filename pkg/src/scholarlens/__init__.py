"""scholarlens: answer analytical questions over scholarly metadata at flat LLM cost.

The pipeline has three strictly separated layers:

1. a reasoner that turns a natural-language question into a structured
   query plan (rule grammar or LLM backed),
2. a deterministic executor that aggregates counts from a data source and
   never spends a single LLM token, and
3. a synthesizer that renders the bounded statistical summary into prose
   plus a chart configuration.

Raw records never cross the executor boundary, so the narrative cannot
contain fabricated data, and the LLM token cost per query does not depend
on the size of the underlying corpus.
"""

__version__ = "0.1.0"
