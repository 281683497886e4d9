import pytest
from hypothesis import given

from ribbonbound.freegroup import word_from_ints
from ribbonbound.model import (
    Band,
    ParseError,
    RibbonCode,
    parse_ribbon_code,
    serialize_ribbon_code,
    stats,
    validate,
)

from strategies import codes


def test_parse_example(example_text, example_code):
    assert example_code.d == 4
    assert [b.id for b in example_code.bands] == ["B1", "B2", "B3"]
    assert example_code.bands[0] == Band("B1", 1, 2, word_from_ints(3))
    assert example_code.bands[1] == Band("B2", 2, 3, word_from_ints(1))
    assert example_code.bands[2] == Band("B3", 3, 4, word_from_ints(4, 2))
    assert serialize_ribbon_code(example_code) == example_text


def test_parse_comments_and_blanks():
    text = "\n# a ribbon disc\n discs 2 # two discs\n\nband B 1 2 : # empty word\n"
    code = parse_ribbon_code(text)
    assert code.d == 2
    assert code.bands == (Band("B", 1, 2, ()),)


def test_parse_header_only():
    code = parse_ribbon_code("discs 1")
    assert code.d == 1
    assert code.bands == ()


def _err(text):
    with pytest.raises(ParseError) as info:
        parse_ribbon_code(text)
    return info.value


def test_parse_error_positions():
    e = _err("discs 0")
    assert (e.line, e.column) == (1, 7)
    assert "disc count must be >= 1" in e.message

    e = _err("band B1 1 2 : +3")
    assert (e.line, e.column) == (1, 1)
    assert "header" in e.message

    e = _err("discs 4\ndiscs 2")
    assert (e.line, e.column) == (2, 1)
    assert "duplicate 'discs' header" in e.message

    e = _err("discs two")
    assert (e.line, e.column) == (1, 7)

    e = _err("discs 4 junk")
    assert (e.line, e.column) == (1, 9)

    e = _err("discs 4\nband B! 1 2 :")
    assert (e.line, e.column) == (2, 6)
    assert "bad band id" in e.message

    e = _err("discs 4\nband B1 1 5 :")
    assert (e.line, e.column) == (2, 11)
    assert "foot disc 5 out of range" in e.message

    e = _err("discs 4\nband B1 1 2 +3")
    assert (e.line, e.column) == (2, 13)
    assert "':'" in e.message

    e = _err("discs 4\nband B1 1 2 : 3")
    assert (e.line, e.column) == (2, 15)
    assert "bad letter token" in e.message

    e = _err("discs 4\nband B1 1 2 : +5")
    assert (e.line, e.column) == (2, 15)
    assert "letter disc 5 out of range" in e.message

    e = _err("discs 4\nband B1 1 2 :\nband B1 2 3 :")
    assert (e.line, e.column) == (3, 6)
    assert "duplicate band id" in e.message

    e = _err("discs 4\nband B1 1 2 : +0")
    assert (e.line, e.column) == (2, 15)

    e = _err("# only comments\n")
    assert "missing 'discs' header" in e.message

    e = _err("discs 4\nband\n")
    assert e.line == 2
    assert "expected band id" in e.message

    e = _err("discs 4\nband B1 1\n")
    assert "expected end disc" in e.message

    e = _err("discs")
    assert (e.line, e.column) == (1, 6)
    assert "expected disc count" in e.message


def test_serialize_empty_word_ends_at_colon():
    code = RibbonCode(2, (Band("B", 1, 2, ()),))
    assert serialize_ribbon_code(code) == "discs 2\nband B 1 2 :\n"


def test_serialize_preserves_band_order():
    code = RibbonCode(
        2, (Band("Z", 1, 2, ()), Band("A", 2, 1, word_from_ints(-1)))
    )
    assert serialize_ribbon_code(code) == "discs 2\nband Z 1 2 :\nband A 2 1 : -1\n"


def test_serialize_rejects_invalid():
    with pytest.raises(ValueError):
        serialize_ribbon_code(RibbonCode(2, (Band("B", 1, 3, ()),)))


def test_validate_examples(example_code):
    assert validate(example_code) == []

    diags = validate(RibbonCode(2, (Band("B1", 1, 3, ()),)))
    assert len(diags) == 1
    assert "foot disc 3 out of range" in diags[0]

    diags = validate(
        RibbonCode(2, (Band("B1", 1, 2, ()), Band("B1", 2, 1, ())))
    )
    assert any("duplicate id" in d for d in diags)

    diags = validate(RibbonCode(2, (Band("B1", 1, 2, word_from_ints(7)),)))
    assert any("letter disc 7 out of range" in d for d in diags)

    assert validate(RibbonCode(0, ())) != []
    assert any("bad id" in d for d in validate(RibbonCode(1, (Band("a b", 1, 1, ()),))))


def test_stats_examples(example_code):
    s = stats(example_code)
    assert (s.d, s.b, s.chi) == (4, 3, 1)
    assert s.connected and s.components == 1
    assert s.double_genus == 0

    s = stats(RibbonCode(1, ()))
    assert (s.chi, s.double_genus) == (1, 0)

    two_loops = RibbonCode(1, (Band("B1", 1, 1, ()), Band("B2", 1, 1, ())))
    s = stats(two_loops)
    assert (s.chi, s.double_genus) == (-1, 2)


def test_stats_disconnected():
    s = stats(RibbonCode(2, ()))
    assert not s.connected
    assert s.components == 2
    assert s.chi == 2
    assert s.double_genus is None


def test_stats_requires_valid():
    with pytest.raises(ValueError):
        stats(RibbonCode(2, (Band("B1", 1, 3, ()),)))


@given(codes())
def test_parse_serialize_identity(code):
    text = serialize_ribbon_code(code)
    again = parse_ribbon_code(text)
    assert again == code
    assert serialize_ribbon_code(again) == text


@given(codes())
def test_chi_is_d_minus_b(code):
    s = stats(code)
    assert s.chi == code.d - len(code.bands)
    if s.connected:
        assert s.double_genus == len(code.bands) - code.d + 1
