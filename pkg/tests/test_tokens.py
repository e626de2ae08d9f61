from scholarlens.core.tokens import estimate_tokens


def test_empty_string_is_zero():
    assert estimate_tokens("") == 0


def test_four_chars_one_token():
    assert estimate_tokens("abcd") == 1


def test_ten_chars_three_tokens():
    assert estimate_tokens("a" * 10) == 3


def test_ceiling_behavior():
    assert estimate_tokens("a") == 1
    assert estimate_tokens("a" * 4) == 1
    assert estimate_tokens("a" * 5) == 2


def test_monotone_in_length():
    previous = 0
    for k in range(0, 120):
        now = estimate_tokens("x" * k)
        assert now >= previous
        previous = now


def test_counts_characters_not_bytes():
    # four non-ascii characters estimate the same as four ascii ones
    assert estimate_tokens("éééé") == estimate_tokens("eeee")
