import pytest

import linksgould


def test_evaluate_accepts_text_and_words():
    poly = linksgould.evaluate("1 1 1")
    assert linksgould.to_compact(poly) == [{0: 1, 2: 2}, {1: -1, 3: -1}, {2: 1}]
    braid = linksgould.parse_braid("1 1 1")
    assert linksgould.evaluate(braid) == poly


def test_evaluate_empty_words():
    assert linksgould.evaluate("", strings=1) == {(0, 0): 1}
    assert linksgould.evaluate("", strings=2) == {}


def test_evaluate_respects_cap():
    from linksgould.engine import SizeCapExceeded

    with pytest.raises(SizeCapExceeded):
        linksgould.evaluate("1", strings=6)
    assert linksgould.evaluate("1", strings=6, max_size=4**12) == {}
