"""Tools: classify, report

Structure reports for the primitive disk complex
"""

from typing import Any, Dict

from pqseq import make_params
from structure import disk_sequence_model, report
from utils.config import Config
from utils.errors import safe_tool_call


@safe_tool_call
def cmd_classify(config: Config, p: int, q: int, **kwargs) -> Dict[str, Any]:
    """Structure report for L(p, q)"""
    rep = report(make_params(p, q))
    return {"data": rep.to_record(), "text": rep.to_text(), "exit_code": 0}


@safe_tool_call
def cmd_report(config: Config, p: int, q: int, **kwargs) -> Dict[str, Any]:
    """Structure report together with the modeled disk sequence"""
    params = make_params(p, q)
    rep = report(params)
    model = disk_sequence_model(params, config.get("verification.threshold", 64))
    return {
        "data": {"structure": rep.to_record(), "disk_sequence": model.to_record()},
        "text": rep.to_text() + "\n" + model.to_text(),
        "exit_code": 0,
    }
