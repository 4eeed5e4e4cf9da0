"""Command-line surface for the lens space toolkit

Commands are registered functions ``cmd_*(config, **params)``; requests go
through ``LensCLI.handle_request`` which turns toolkit errors into failure
responses carrying the exit code.

Exit codes: 0 success or primitive, 1 negative verdict or counterexample,
2 validation or parse error, 3 contractible input for ``witness``.
"""

import json
import logging
import sys
from typing import Any, Dict, List, Optional

from enums import OutputFormat
from utils.config import Config, get_config
from utils.errors import LensError, ValidationError
from utils.log import setup_logging

logger = logging.getLogger(__name__)


class LensCLI:
    """Command registry and dispatcher"""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or get_config()
        self.tools = {}
        self._register_tools()

    def _register_tools(self):
        """Register all available commands"""
        from tools.sequence import cmd_sequence, cmd_four_primitives
        from tools.primitive import cmd_primitive, cmd_canonical
        from tools.classify import cmd_classify, cmd_report
        from tools.witness import cmd_witness
        from tools.sweep import cmd_sweep

        self.tools = {
            "sequence": cmd_sequence,
            "four-primitives": cmd_four_primitives,
            "primitive": cmd_primitive,
            "canonical": cmd_canonical,
            "classify": cmd_classify,
            "report": cmd_report,
            "witness": cmd_witness,
            "sweep": cmd_sweep,
        }

    def handle_request(self, request: Dict[str, Any]) -> Dict[str, Any]:
        """Handle a single command request

        Args:
            request: Dict with 'method' and 'params'

        Returns:
            Response dict with 'success' and 'data', or 'error' and 'exit_code'
        """
        method = request.get("method")
        params = request.get("params", {})

        if not method:
            return self._error_response("Missing 'method' field", 2)

        if method not in self.tools:
            return self._error_response(f"Unknown command: {method}", 2)

        try:
            result = self.tools[method](self.config, **params)
            return self._success_response(result)

        except LensError as e:
            return self._error_response(str(e), e.exit_code)

        except Exception as e:
            return self._error_response(f"Unexpected error: {e}", 1)

    def _success_response(self, data: Any) -> Dict[str, Any]:
        return {"success": True, "data": data}

    def _error_response(self, error: str, exit_code: int) -> Dict[str, Any]:
        return {"success": False, "error": error, "exit_code": exit_code}

    def render(self, command: str, result: Dict[str, Any], output_format: OutputFormat) -> str:
        """Format a successful command result for stdout"""
        if output_format == OutputFormat.Structured:
            envelope = {
                "schema": self.config.get("output.schema", "lens-pdc/1"),
                "command": command,
                "data": result["data"],
            }
            return json.dumps(envelope, indent=2, sort_keys=True) + "\n"

        if output_format == OutputFormat.Dot:
            if "dot" not in result:
                raise ValidationError(f"Command {command} has no dot output")
            return result["dot"]

        return result["text"]


def _build_parser():
    import argparse

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat],
                        help="Output format (default from config, usually text)")
    common.add_argument("--config", type=str, help="User config JSON merged over the defaults")

    lens = argparse.ArgumentParser(add_help=False)
    lens.add_argument("--p", type=int, required=True, help="Order of the fundamental group")
    lens.add_argument("--q", type=int, required=True, help="Gluing parameter, coprime to p")

    parser = argparse.ArgumentParser(
        prog="lens_cli",
        description="Primitive disk complexes of genus two splittings of lens spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("sequence", parents=[common, lens], help="(p,q)-sequence table")
    seq.add_argument("--verify-threshold", type=int, help="Oracle-check words when p <= this")

    prim = sub.add_parser("primitive", parents=[common], help="Whitehead primitivity verdict")
    prim.add_argument("word", help="Word text, uppercase letters are inverses")
    prim.add_argument("--trace", action="store_true", help="Print the Whitehead descent")

    canon = sub.add_parser("canonical", parents=[common], help="Closed-form primitive w(m,n)")
    canon.add_argument("--m", type=int, required=True)
    canon.add_argument("--n", type=int, required=True)

    sub.add_parser("classify", parents=[common, lens], help="Structure report of P(V)")
    sub.add_parser("report", parents=[common, lens], help="Structure report with the disk sequence")
    sub.add_parser("four-primitives", parents=[common, lens], help="Formula vs oracle primitive indices")

    wit = sub.add_parser("witness", parents=[common, lens], help="Non-connectivity witness strip")
    wit.add_argument("--dot", action="store_true", help="Shorthand for --format dot")

    sweep = sub.add_parser("sweep", parents=[common], help="Property sweep")
    sweep.add_argument("--pmax", type=int, help="Largest p to sweep")
    sweep.add_argument("--seed", type=int, help="Random-word seed")
    sweep.add_argument("--workers", type=int, help="Worker processes")

    return parser


def _params_from_args(args) -> Dict[str, Any]:
    command = args.command
    if command in ("sequence", "classify", "report", "four-primitives", "witness"):
        params = {"p": args.p, "q": args.q}
        if command == "sequence" and args.verify_threshold is not None:
            params["verify_threshold"] = args.verify_threshold
        return params
    if command == "primitive":
        return {"word": args.word, "trace": args.trace}
    if command == "canonical":
        return {"m": args.m, "n": args.n}
    return {"pmax": args.pmax, "seed": args.seed, "workers": args.workers}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code"""
    args = _build_parser().parse_args(argv)

    config = Config(args.config) if args.config else get_config()
    setup_logging(config)

    format_name = args.format or config.get("output.format", "text")
    if getattr(args, "dot", False):
        format_name = OutputFormat.Dot.value
    output_format = OutputFormat(format_name)

    cli = LensCLI(config)
    response = cli.handle_request({"method": args.command, "params": _params_from_args(args)})

    if not response["success"]:
        print(f"[FAIL] {response['error']}", file=sys.stderr)
        return response["exit_code"]

    result = response["data"]
    try:
        sys.stdout.write(cli.render(args.command, result, output_format))
    except LensError as e:
        print(f"[FAIL] {e}", file=sys.stderr)
        return e.exit_code
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
