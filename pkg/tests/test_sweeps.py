"""Tests for the sweep tally and runner

Covers SweepTally counting and thread safety, per-cell checks, the
random-word corpus and the (p, q) ordering of pooled runs.
"""

import random
import sys
import threading
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from sweeps.runner import SweepRunner, check_cell, coprime_pairs, random_word
from sweeps.tally import SweepTally
from tools.sweep import cmd_sweep
from utils.config import Config
from utils.errors import ValidationError
from words import ZY, free_reduce_codes


def small_config(random_words=50):
    config = Config()
    config.set("sweep.random_words", random_words)
    config.set("sweep.max_word_length", 12)
    return config


def test_tally_basic():
    """Test SweepTally basic functionality"""
    print("\n[TEST] SweepTally basic operations...")

    tally = SweepTally(max_examples=2)
    assert tally.passed
    assert tally.summary() == {"checks": {}, "counterexamples": []}

    tally.record("symmetry", True)
    tally.record("symmetry", True)
    tally.record("separation", False, "p=12 q=5")
    assert not tally.passed

    summary = tally.summary()
    assert summary["checks"]["symmetry"] == {"passed": 2, "failed": 0}
    assert summary["checks"]["separation"] == {"passed": 0, "failed": 1}
    assert summary["counterexamples"] == [{"check": "separation", "detail": "p=12 q=5"}]

    # counted but not kept past max_examples
    tally.record("separation", False, "a")
    tally.record("separation", False, "b")
    assert tally.summary()["checks"]["separation"]["failed"] == 3
    assert len(tally.summary()["counterexamples"]) == 2
    assert repr(tally) == "SweepTally(2 checks, 3 failures)"

    tally.reset()
    assert tally.passed
    assert tally.summary()["checks"] == {}

    print("  [PASS] SweepTally basic operations")


def test_tally_record_cell():
    tally = SweepTally()
    tally.record_cell({"p": 5, "q": 2, "checks": {"symmetry": True, "four_primitives": False}})
    summary = tally.summary()
    assert summary["checks"]["symmetry"]["passed"] == 1
    assert summary["counterexamples"] == [{"check": "four_primitives", "detail": "p=5 q=2"}]


def test_tally_thread_safety():
    """Test SweepTally thread safety"""
    print("\n[TEST] SweepTally thread safety...")

    tally = SweepTally()
    errors = []

    def worker(worker_id, iterations):
        try:
            for i in range(iterations):
                tally.record(f"check_{worker_id % 3}", i % 10 != 0, f"worker {worker_id}")
                tally.summary()
        except Exception as e:
            errors.append(e)

    # Run 10 threads, 100 iterations each
    threads = [threading.Thread(target=worker, args=(i, 100)) for i in range(10)]

    for t in threads:
        t.start()

    for t in threads:
        t.join()

    if errors:
        raise AssertionError(f"Thread safety errors: {errors}")

    counts = tally.summary()["checks"]
    assert sum(c["passed"] + c["failed"] for c in counts.values()) == 1000
    assert sum(c["failed"] for c in counts.values()) == 100

    print("  [PASS] SweepTally thread safety")


def test_coprime_pairs():
    assert list(coprime_pairs(4)) == [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]


def test_check_cell():
    print("\n[TEST] check_cell...")

    cell = check_cell(12, 5)
    assert cell["checks"] == {
        "four_primitives": True,
        "symmetry": True,
        "classify_witness": True,
        "witness_endpoints": True,
        "separation": True,
    }

    cell = check_cell(7, 2)
    assert cell["checks"] == {"four_primitives": True, "symmetry": True, "classify_witness": True}

    print("  [PASS] check_cell")


def test_random_word_is_reduced_and_seeded():
    rng = random.Random(1708)
    words = [random_word(rng, 20) for _ in range(50)]
    for w in words:
        assert w.alphabet == ZY
        assert free_reduce_codes(w.codes) == w.codes

    rng = random.Random(1708)
    assert [random_word(rng, 20) for _ in range(50)] == words


def test_runner_small():
    print("\n[TEST] SweepRunner pmax=8...")

    runner = SweepRunner(small_config(), pmax=8, seed=1708, workers=1)
    tally = runner.run()
    assert tally.passed, tally.summary()["counterexamples"]

    checks = tally.summary()["checks"]
    assert checks["four_primitives"]["passed"] == len(list(coprime_pairs(8)))
    assert checks["invariance"]["passed"] == 7
    assert checks["substitution"]["passed"] == 50

    print("  [PASS] SweepRunner pmax=8")


def test_runner_defaults_from_config():
    config = small_config()
    config.set("sweep.pmax", 5)
    runner = SweepRunner(config)
    assert (runner.pmax, runner.seed, runner.workers) == (5, 1708, 1)


@pytest.mark.slow
def test_pooled_cells_keep_order():
    """Two workers give the same ordered cells as one"""
    serial = SweepRunner(small_config(), pmax=14, workers=1).cells()
    pooled = SweepRunner(small_config(), pmax=14, workers=2).cells()
    assert pooled == serial
    assert [(c["p"], c["q"]) for c in serial] == list(coprime_pairs(14))


def test_cmd_sweep():
    result = cmd_sweep(small_config(random_words=10), pmax=6, seed=3, workers=1)
    assert result["exit_code"] == 0
    assert result["data"]["pmax"] == 6
    assert result["text"].rstrip().endswith("all checks passed")

    with pytest.raises(ValidationError):
        cmd_sweep(small_config(), pmax=1)
    with pytest.raises(ValidationError):
        cmd_sweep(small_config(), pmax=6, workers=0)


def run_all_tests():
    """Run the tests that need no fixtures"""
    tests = [
        test_tally_basic,
        test_tally_thread_safety,
        test_coprime_pairs,
        test_check_cell,
        test_runner_small,
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
