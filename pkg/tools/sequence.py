"""Tools: sequence, four-primitives

Generate (p,q)-sequences and compare the Four Primitives formula with the oracle
"""

from typing import Any, Dict, Optional

from pqseq import four_primitive_indices, make_params, make_sequence, oracle_primitive_indices
from utils.config import Config
from utils.errors import safe_tool_call


@safe_tool_call
def cmd_sequence(
    config: Config,
    p: int,
    q: int,
    verify_threshold: Optional[int] = None,
    **kwargs
) -> Dict[str, Any]:
    """Render the (p,q)-sequence

    Parameters:
        p, q: Lens parameters (coprime, 0 < q < p)
        verify_threshold: Oracle-check words when p is at most this

    Returns:
        Dictionary with:
        - data: sequence record (words, primitive indices, verified flag)
        - text: table of index, word, primitive flag
        - exit_code: 0
    """
    params = make_params(p, q)
    if verify_threshold is None:
        verify_threshold = config.get("verification.threshold", 64)

    seq = make_sequence(params, verify_threshold)
    return {"data": seq.to_record(), "text": seq.to_text(), "exit_code": 0}


@safe_tool_call
def cmd_four_primitives(config: Config, p: int, q: int, **kwargs) -> Dict[str, Any]:
    """Formula indices {1, q', p-q', p-1} against the Whitehead oracle

    The oracle runs regardless of the verification threshold; exit code 1
    on disagreement.
    """
    params = make_params(p, q)
    seq = make_sequence(params, verify_threshold=0)
    formula = four_primitive_indices(params)
    oracle = oracle_primitive_indices(list(seq.words))
    agree = formula == oracle

    data = {
        "p": params.p,
        "q": params.q,
        "q_prime": params.q_prime,
        "formula": sorted(formula),
        "oracle": sorted(oracle),
        "agree": agree,
    }
    text = (
        f"# four primitives for ({params.p},{params.q})  q'={params.q_prime}\n"
        f"formula  {sorted(formula)}\n"
        f"oracle   {sorted(oracle)}\n"
        f"{'agree' if agree else 'DISAGREE'}\n"
    )
    return {"data": data, "text": text, "exit_code": 0 if agree else 1}
