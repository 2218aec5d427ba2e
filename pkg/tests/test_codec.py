import pytest

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityOverflow, ParseError
from junta_bounds.tables import TruthTable, format_table, parse_table, read_table


def test_format_and_parse():
    assert format_table(TruthTable(2, 0x8)) == "bf:v1:n=2:0x8"
    assert format_table(TruthTable(0, 0)) == "bf:v1:n=0:0x0"
    assert parse_table("  bf:v1:n=3:0xE8\n") == TruthTable(3, 0xE8)
    assert str(TruthTable(3, 0xE8)) == "bf:v1:n=3:0xe8"


@pytest.mark.parametrize(
    "text, offset",
    [
        ("bf:v1:n=2:0xg", 12),
        ("bf:v2:n=2:0x8", 4),
        ("bf:v1:m=2:0x8", 6),
        ("bf:v1:n=:0x8", 8),
        ("bf:v1:n=2;0x8", 9),
        ("bf:v1:n=2:0x", 12),
        ("  bf:v1:n=2:0xz", 14),
    ],
)
def test_parse_errors_carry_byte_offsets(text, offset):
    with pytest.raises(ParseError) as err:
        parse_table(text)
    assert err.value.offset == offset
    assert f"at byte {offset}" in str(err.value)


def test_extra_bits_are_a_parse_error():
    with pytest.raises(ParseError):
        parse_table("bf:v1:n=1:0x4")


def test_arity_above_the_limit_overflows(monkeypatch):
    monkeypatch.setenv("BF_NMAX", "3")
    get_settings.cache_clear()
    with pytest.raises(ArityOverflow):
        parse_table("bf:v1:n=4:0x0")


def test_read_table_from_file_skips_comments(tmp_path):
    path = tmp_path / "and.bf"
    path.write_text("# AND of two bits\n\nbf:v1:n=2:0x8\n", encoding="utf-8")
    assert read_table(str(path)) == TruthTable(2, 0x8)
    assert read_table(path) == TruthTable(2, 0x8)


def test_read_table_from_empty_file(tmp_path):
    path = tmp_path / "empty.bf"
    path.write_text("# nothing\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_table(path)


def test_read_table_rejects_binary_files(tmp_path):
    path = tmp_path / "binary.bf"
    path.write_bytes(b"\xff\xfebf:v1:n=2:0x8")
    with pytest.raises(ParseError) as err:
        read_table(path)
    assert err.value.offset == 0
