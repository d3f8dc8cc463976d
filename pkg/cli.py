"""
Command Line Interface for the ladder algebra toolkit

Results go to stdout, logs to stderr. Exit status: 0 when everything
holds, 1 on a verification failure, 2 on usage, parse or domain errors.
"""
import os
import sys
import json
import logging
import argparse
from typing import List, Optional

import pandas as pd
from dotenv import load_dotenv

from errors import AlgebraError, ConsistencyError, ParseError
from expr_parser import eval_text, format_element, parse_vector
from heisenberg_virasoro import FockConfig, residual_report
from hopf_ladder import HopfElement, antipode, coproduct, monomial, s_star_y_checked, s_star_y_direct
from lie_core import LieElement
from modules_rep import act, matrix
from scalars import Scalar
from utils import append_jsonl
from verifier import SUITE_NAMES, Verifier, report_line

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _lie_element(text: str) -> LieElement:
    value = eval_text(text)
    if not isinstance(value, LieElement):
        raise AlgebraError("This command needs an element of the ladder Lie algebra; wrap gl terms in phi(...)")
    return value


def _hopf_monomial(text: str) -> HopfElement:
    """'3' is Gamma_3, '1,2' is Gamma_1 Gamma_2, '0' is the unit"""
    try:
        indices = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ParseError(f"Monomial must be comma separated loop numbers, got '{text}'", 0, text)
    if any(k < 0 for k in indices):
        raise AlgebraError(f"Loop numbers must be non-negative, got '{text}'")
    return monomial(tuple(k for k in indices if k))


def cmd_eval(args) -> int:
    print(format_element(eval_text(args.expr), args.format))
    return EXIT_OK


def cmd_act(args) -> int:
    x = _lie_element(args.expr)
    v = parse_vector(args.vector)
    print(format_element(act(x, v), args.format))
    return EXIT_OK


def cmd_matrix(args) -> int:
    mat = matrix(_lie_element(args.expr), args.size)
    if args.format == 'json':
        print(json.dumps(mat.to_json(), indent=2))
    elif args.format == 'csv':
        print(mat.to_csv(), end='')
    else:
        print(mat.to_text())
    return EXIT_OK


def cmd_hopf(args) -> int:
    x = _hopf_monomial(args.monomial)
    if args.operation == 'coproduct':
        result = coproduct(x)
    elif args.operation == 'antipode':
        result = antipode(x)
    else:
        support = x.support()
        single = len(support) == 1 and len(support[0]) == 1
        result = s_star_y_checked(support[0][0]) if single else s_star_y_direct(x)
    print(format_element(result, args.format))
    return EXIT_OK


def cmd_virasoro(args) -> int:
    cfg = FockConfig(Scalar.parse(args.mu), Scalar.parse(args.lam))
    records = residual_report(cfg, args.n, args.m, args.max_degree)
    if args.format == 'json':
        for record in records:
            print(json.dumps(record, sort_keys=True))
    else:
        frame = pd.DataFrame([{k: r[k] for k in ('n', 'm', 'mu', 'lambda', 'degree', 'pass')} for r in records])
        print(frame.to_string(index=False))
    return EXIT_OK if all(r['pass'] for r in records) else EXIT_FAILURE


def cmd_verify(args) -> int:
    verifier = Verifier()
    if args.workers is not None:
        verifier.workers = max(1, args.workers)
    reports = verifier.run(args.suite, trials=args.trials, seed=args.seed,
                           max_index=args.max_index, max_degree=args.max_degree)
    report_path = args.report or os.getenv('LADDER_REPORT_PATH')
    for report in reports:
        print(report_line(report) if args.format == 'json' else report.summary())
        if report_path:
            append_jsonl(report.to_dict(), report_path)
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        logger.warning(f"Suites with failures: {', '.join(failed)}")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_serve(args) -> int:
    from app import app
    logger.info(f"Starting development server on {args.host}:{args.port}")
    app.run(host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ladder', description='Insertion-elimination Lie algebra of ladder graphs')
    parser.add_argument('--log-level', default=os.getenv('LADDER_LOG_LEVEL', 'INFO'),
                        help='Logging level (default: LADDER_LOG_LEVEL or INFO)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('eval', help='Evaluate an expression to canonical form')
    p.add_argument('expr')
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser('act', help='Act with a Lie element on a module vector')
    p.add_argument('expr')
    p.add_argument('--vector', required=True, help="Vector such as 't[0] + 2*t[3]'")
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(handler=cmd_act)

    p = sub.add_parser('matrix', help='Truncated matrix on t_0..t_N')
    p.add_argument('expr')
    p.add_argument('--size', type=int, required=True, help='Largest basis index N')
    p.add_argument('--format', choices=['text', 'json', 'csv'], default='text')
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser('hopf', help='Coproduct, antipode or S*Y of a ladder monomial')
    p.add_argument('operation', choices=['coproduct', 'antipode', 'sy'])
    p.add_argument('monomial', help="Loop numbers, e.g. '3' or '1,2'")
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(handler=cmd_hopf)

    p = sub.add_parser('virasoro', help='Check [L_n, L_m] on the Fock module')
    p.add_argument('action', choices=['bracket'])
    p.add_argument('n', type=int)
    p.add_argument('m', type=int)
    p.add_argument('--mu', default='0')
    p.add_argument('--lambda', dest='lam', default='0')
    p.add_argument('--max-degree', type=int, default=6)
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(handler=cmd_virasoro)

    p = sub.add_parser('verify', help='Run a verification suite')
    p.add_argument('suite', choices=SUITE_NAMES)
    p.add_argument('--trials', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--max-index', type=int)
    p.add_argument('--max-degree', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--report', help='Append JSON lines here (default: LADDER_REPORT_PATH)')
    p.add_argument('--format', choices=['text', 'json'], default='text')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('serve', help='Run the HTTP service (development server)')
    p.add_argument('--host', default=os.getenv('HOST', '0.0.0.0'))
    p.add_argument('--port', type=int, default=int(os.getenv('PORT', 5000)))
    p.set_defaults(handler=cmd_serve)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    logger.info(f"Running command: {args.command}")

    try:
        return args.handler(args)
    except ConsistencyError as e:
        logger.error(f"Consistency check failed: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except (ParseError, AlgebraError, KeyError, ValueError) as e:
        logger.warning(f"Rejected input: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Unexpected error: {str(e)}", exc_info=True)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
