"""Tool: sweep

Property sweep over every coprime (p, q) up to pmax plus seeded random words
"""

from typing import Any, Dict, Optional

from sweeps.runner import SweepRunner
from utils.config import Config
from utils.errors import ValidationError, safe_tool_call


@safe_tool_call
def cmd_sweep(
    config: Config,
    pmax: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    **kwargs
) -> Dict[str, Any]:
    """Run all property checks

    Parameters:
        pmax: Largest p (``sweep.pmax`` if None)
        seed: Random-word seed (``sweep.seed`` if None)
        workers: Process count (``sweep.workers`` if None)

    Returns:
        Dictionary with the tally summary; exit_code 1 on any counterexample
    """
    if pmax is not None and pmax < 2:
        raise ValidationError(f"pmax must be at least 2, got {pmax}")
    if workers is not None and workers < 1:
        raise ValidationError(f"workers must be at least 1, got {workers}")

    runner = SweepRunner(config, pmax=pmax, seed=seed, workers=workers)
    tally = runner.run()
    summary = tally.summary()

    lines = [f"# sweep  pmax={runner.pmax}  seed={runner.seed}  workers={runner.workers}"]
    for name, counts in sorted(summary["checks"].items()):
        lines.append(f"{name:<22} passed {counts['passed']:>6}  failed {counts['failed']:>4}")
    for example in summary["counterexamples"]:
        lines.append(f"counterexample  {example['check']}  {example['detail']}")
    lines.append("all checks passed" if tally.passed else "COUNTEREXAMPLES FOUND")

    data = {"pmax": runner.pmax, "seed": runner.seed, **summary}
    return {"data": data, "text": "\n".join(lines) + "\n", "exit_code": 0 if tally.passed else 1}
