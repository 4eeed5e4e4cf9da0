"""Thread-safe pass/fail counts for property sweeps"""

import threading
from typing import Any, Dict, List, Optional


class SweepTally:
    """Per-check pass/fail counts plus the counterexamples seen

    Counterexamples beyond ``max_examples`` are counted but not kept.
    """

    def __init__(self, max_examples: int = 50):
        self.counts: Dict[str, Dict[str, int]] = {}
        self.counterexamples: List[Dict[str, Any]] = []
        self.max_examples = max_examples
        self._lock = threading.Lock()

    def record(self, check: str, ok: bool, detail: Optional[str] = None) -> None:
        with self._lock:
            entry = self.counts.setdefault(check, {"passed": 0, "failed": 0})
            entry["passed" if ok else "failed"] += 1
            if not ok and len(self.counterexamples) < self.max_examples:
                self.counterexamples.append({"check": check, "detail": detail or ""})

    def record_cell(self, cell: Dict[str, Any]) -> None:
        """Fold in one result of SweepRunner.check_cell"""
        for check, ok in cell["checks"].items():
            self.record(check, ok, f"p={cell['p']} q={cell['q']}")

    @property
    def passed(self) -> bool:
        with self._lock:
            return all(entry["failed"] == 0 for entry in self.counts.values())

    def summary(self) -> Dict[str, Any]:
        with self._lock:
            return {
                "checks": {name: dict(entry) for name, entry in self.counts.items()},
                "counterexamples": list(self.counterexamples),
            }

    def reset(self) -> None:
        with self._lock:
            self.counts.clear()
            self.counterexamples.clear()

    def __repr__(self) -> str:
        with self._lock:
            failed = sum(entry["failed"] for entry in self.counts.values())
            return f"SweepTally({len(self.counts)} checks, {failed} failures)"
