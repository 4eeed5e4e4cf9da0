"""Property sweep runner

Runs the per-(p, q) checks serially or on a process pool and folds the results
into a SweepTally in (p, q) order. Random-word checks draw from a seeded
random.Random so every run with the same seed sees the same corpus.
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pqseq import check_symmetry, four_primitive_indices, make_params, make_sequence, oracle_primitive_indices
from primitivity import detect_obstruction, is_primitive, is_primitive_power
from replacement import separation_check, witness
from structure import classify, homeomorphism_invariance_check
from sweeps.tally import SweepTally
from utils.config import Config
from utils.errors import ContractibleInputError, LensError
from words import ZY, Word, free_reduce_codes, substitute_z_to_xy

logger = logging.getLogger(__name__)

LETTERS = (1, -1, 2, -2)


def coprime_pairs(pmax: int) -> Iterator[Tuple[int, int]]:
    for p in range(2, pmax + 1):
        for q in range(1, p):
            try:
                make_params(p, q)
            except LensError:
                continue
            yield p, q


def check_cell(p: int, q: int) -> Dict[str, Any]:
    """All per-(p, q) checks; module-level so a process pool can pickle it"""
    params = make_params(p, q)
    seq = make_sequence(params, verify_threshold=0)
    checks = {
        "four_primitives": oracle_primitive_indices(list(seq.words)) == four_primitive_indices(params),
        "symmetry": check_symmetry(seq),
    }

    contractible = classify(params)
    try:
        strip = witness(params)
    except ContractibleInputError:
        checks["classify_witness"] = contractible
    except LensError as e:
        logger.warning("Witness for (%d,%d) failed: %s", p, q, e)
        checks["classify_witness"] = not contractible
        checks["witness_endpoints"] = False
    else:
        checks["classify_witness"] = not contractible
        checks["witness_endpoints"] = True
        checks["separation"] = separation_check(strip)

    return {"p": p, "q": q, "checks": checks}


def random_word(rng: random.Random, max_length: int) -> Word:
    """Freely reduced word over {z, y} from at most max_length random letters"""
    length = rng.randint(1, max_length)
    return Word(free_reduce_codes(rng.choice(LETTERS) for _ in range(length)), ZY)


class SweepRunner:
    """Runs every sweep check and tallies the outcome"""

    def __init__(self, config: Config, pmax: Optional[int] = None,
                 seed: Optional[int] = None, workers: Optional[int] = None):
        section = config.get_section("sweep")
        self.pmax = pmax if pmax is not None else section.get("pmax", 40)
        self.seed = seed if seed is not None else section.get("seed", 0)
        self.workers = workers if workers is not None else section.get("workers", 1)
        self.random_words = section.get("random_words", 1000)
        self.max_word_length = section.get("max_word_length", 30)
        self.tally = SweepTally()

    def cells(self) -> List[Dict[str, Any]]:
        """Per-(p, q) results ordered by (p, q) whatever the worker count"""
        pairs = list(coprime_pairs(self.pmax))
        ps = [p for p, _ in pairs]
        qs = [q for _, q in pairs]
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                return list(executor.map(check_cell, ps, qs, chunksize=8))
        return [check_cell(p, q) for p, q in pairs]

    def check_random_words(self) -> None:
        rng = random.Random(self.seed)
        for _ in range(self.random_words):
            w = random_word(rng, self.max_word_length)

            same = is_primitive(w) == is_primitive(substitute_z_to_xy(w))
            self.tally.record("substitution", same, str(w))

            obstruction = detect_obstruction(w)
            if obstruction is not None:
                sound = not is_primitive(w) and not is_primitive_power(w)
                self.tally.record("obstruction_soundness", sound, f"{w} {obstruction}")

    def run(self) -> SweepTally:
        self.tally.reset()

        cells = self.cells()
        for cell in cells:
            self.tally.record_cell(cell)
        logger.info("Checked %d (p,q) cells up to p=%d", len(cells), self.pmax)

        for p in range(2, self.pmax + 1):
            self.tally.record("invariance", homeomorphism_invariance_check(p), f"p={p}")

        self.check_random_words()
        logger.info("Sweep finished: %r", self.tally)
        return self.tally
