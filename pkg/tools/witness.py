"""Tool: witness

Replacement strip separating two primitive disks of a non-contractible P(V)
"""

from typing import Any, Dict

from pqseq import make_params
from replacement import separation_check, witness
from utils.config import Config
from utils.errors import safe_tool_call


@safe_tool_call
def cmd_witness(config: Config, p: int, q: int, **kwargs) -> Dict[str, Any]:
    """Build the witness strip

    Returns:
        Dictionary with data (strip record plus "separated"), text, dot and
        exit_code 0, or 1 if the strip does not separate

    Raises:
        ContractibleInputError: For contractible L(p, q) (exit code 3)
    """
    strip = witness(make_params(p, q))
    separated = separation_check(strip)
    data = strip.to_record()
    data["separated"] = separated
    text = strip.to_text() + f"separated {'yes' if separated else 'no'}\n"
    return {"data": data, "text": text, "dot": strip.to_dot(), "exit_code": 0 if separated else 1}
