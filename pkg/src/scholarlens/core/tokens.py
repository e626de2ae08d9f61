"""Deterministic token estimator used for all offline accounting.

The estimator is a fixed chars/4 rule so that every ledger figure in mock
mode is reproducible on any machine without a vendor tokenizer. When a
live provider reports actual usage, the reported numbers take precedence
over estimates (see TokenUsage.estimated).
"""

from __future__ import annotations

CHARS_PER_TOKEN = 4


def estimate_tokens(text: str) -> int:
    """Estimate the token count of ``text`` as ceil(len/4).

    Deterministic and monotone non-decreasing in character count. Empty
    input costs zero tokens.
    """
    return (len(text) + CHARS_PER_TOKEN - 1) // CHARS_PER_TOKEN
