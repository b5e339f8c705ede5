from unittest.mock import patch

from src import settings
from src.metric import DEFAULT_VERTEX_BUDGET, SuffixArrayMethod


class TestIntEnv:
    """Tests for integer environment settings."""

    def test_default_when_unset(self):
        """Test that a missing variable falls back to the default."""
        with patch.dict("os.environ", {}, clear=True):
            assert settings._int_env("ISOWORD_VERTEX_BUDGET", DEFAULT_VERTEX_BUDGET) == (
                DEFAULT_VERTEX_BUDGET
            )

    def test_parsed_value(self):
        """Test that a valid value is used."""
        with patch.dict("os.environ", {"ISOWORD_VERTEX_BUDGET": "1000"}):
            assert settings._int_env("ISOWORD_VERTEX_BUDGET", 5) == 1000

    def test_invalid_value_logs_warning(self, caplog):
        """Test that garbage is ignored with a warning."""
        with patch.dict("os.environ", {"ISOWORD_VERTEX_BUDGET": "lots"}):
            assert settings._int_env("ISOWORD_VERTEX_BUDGET", 5) == 5
        assert "not an integer" in caplog.text

    def test_non_positive_value(self):
        """Test that zero is rejected."""
        with patch.dict("os.environ", {"ISOWORD_VERTEX_BUDGET": "0"}):
            assert settings._int_env("ISOWORD_VERTEX_BUDGET", 5) == 5


class TestMethodEnv:
    """Tests for the suffix array method setting."""

    def test_case_insensitive(self):
        """Test that the method name is normalized."""
        with patch.dict("os.environ", {"ISOWORD_SUFFIX_ARRAY": " SAIS "}):
            assert settings._method_env("ISOWORD_SUFFIX_ARRAY", SuffixArrayMethod.doubling) is (
                SuffixArrayMethod.sais
            )

    def test_unknown_method(self):
        """Test that an unknown method falls back to the default."""
        with patch.dict("os.environ", {"ISOWORD_SUFFIX_ARRAY": "ukkonen"}):
            assert settings._method_env("ISOWORD_SUFFIX_ARRAY", SuffixArrayMethod.doubling) is (
                SuffixArrayMethod.doubling
            )
