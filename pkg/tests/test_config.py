"""Tests for configuration loading, overrides and logging set-up"""

import json
import logging
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from utils.config import CONFIG_ENV_VAR, Config, get_config, reset_config
import utils.log as log


def test_config_loading():
    """Test configuration system loading"""
    print("\n[TEST] Configuration loading...")

    config = Config()

    assert config.get("verification.threshold") == 64
    assert config.get("sweep.pmax") == 40
    assert config.get("sweep.seed") == 1708
    assert config.get("sweep.workers") == 1
    assert config.get("output.format") == "text"
    assert config.get("output.schema") == "lens-pdc/1"
    assert config.get("logging.level") == "WARNING"

    print("  [PASS] Configuration loading")


def test_config_get_set():
    """Test configuration get/set operations"""
    print("\n[TEST] Configuration get/set...")

    config = Config()

    assert config.get("nonexistent.key", "default") == "default"
    assert config.get("verification.threshold.deeper", 7) == 7

    config.set("custom.test.value", 42)
    assert config.get("custom.test.value") == 42

    sweep = config.get_section("sweep")
    assert "random_words" in sweep
    assert "max_word_length" in sweep
    assert config.get_section("missing") == {}

    print("  [PASS] Configuration get/set")


def test_user_config_deep_merge(tmp_path):
    print("\n[TEST] User config merge...")

    user = tmp_path / "user.json"
    user.write_text(json.dumps({"sweep": {"pmax": 12}, "extra": {"flag": True}}))

    config = Config(str(user))
    assert config.get("sweep.pmax") == 12
    # siblings survive the merge
    assert config.get("sweep.seed") == 1708
    assert config.get("extra.flag") is True

    print("  [PASS] User config merge")


def test_config_from_environment(tmp_path, monkeypatch):
    user = tmp_path / "env.json"
    user.write_text(json.dumps({"verification": {"threshold": 10}}))
    monkeypatch.setenv(CONFIG_ENV_VAR, str(user))

    assert Config().get("verification.threshold") == 10


def test_missing_user_config_is_ignored(tmp_path):
    config = Config(str(tmp_path / "absent.json"))
    assert config.get("verification.threshold") == 64


def test_config_singleton():
    """Test configuration singleton pattern"""
    print("\n[TEST] Configuration singleton...")

    reset_config()

    config1 = get_config()
    config2 = get_config()
    assert config1 is config2

    config1.set("test.singleton", "value1")
    assert config2.get("test.singleton") == "value1"

    reset_config()
    assert get_config().get("test.singleton") is None
    reset_config()

    print("  [PASS] Configuration singleton")


def test_setup_logging_once(monkeypatch):
    monkeypatch.setattr(log, "_configured", False)
    root = logging.getLogger()
    before = list(root.handlers)
    level = root.level
    try:
        config = Config()
        config.set("logging.level", "DEBUG")
        log.setup_logging(config)
        assert root.level == logging.DEBUG
        added = [h for h in root.handlers if h not in before]
        assert len(added) == 1

        log.setup_logging(config)
        assert len([h for h in root.handlers if h not in before]) == 1
    finally:
        for handler in root.handlers[:]:
            if handler not in before:
                root.removeHandler(handler)
        root.setLevel(level)


def run_all_tests():
    """Run the tests that need no fixtures"""
    tests = [
        test_config_loading,
        test_config_get_set,
        test_config_singleton,
    ]

    passed = 0
    failed = 0
    for test in tests:
        try:
            test()
            passed += 1
        except AssertionError as e:
            print(f"  [FAIL] {test.__name__}: {e}")
            failed += 1

    print("\n" + "=" * 60)
    print(f"Results: {passed} passed, {failed} failed")
    print("=" * 60)
    return failed == 0


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
