# Copyright (C) 2024 The two-zero workbench authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Command line surface of the workbench.
"""

from twozero_workbench.codes.cyclotomy import check_poly
from twozero_workbench.codes.trace_codes import CodeRole, CodeSpec
from twozero_workbench.conf.loader import JobConfigLoader
from twozero_workbench.gf.tower import build_tower
from twozero_workbench.job.executors import ScanExecutor
from twozero_workbench.params.family import derive
from twozero_workbench.sw.schmidt_white import WeightContext, analyze
from twozero_workbench.util.errors import BudgetExceeded, ConstraintViolated, NonIntegralTheta, NotCoprime, \
    NotPrime, SinkError, SizeExceeded
from twozero_workbench.util.util import SoftKeyboardInterrupt, run_in_event_loop
from twozero_workbench.weights.distribution import weight_distribution
from twozero_workbench.weights.dual import dual_low_weight
from twozero_workbench.weights.moments import full_moment_check, macwilliams_transform, power_moment_check

import argparse
from collections import OrderedDict
import json
import sys
from typing import Any, Dict, List, Optional

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INVALID = 2
EXIT_IO = 3

_DOMAIN_ERRORS = (ConstraintViolated, NotPrime, SizeExceeded, NotCoprime, NonIntegralTheta, BudgetExceeded)


def _add_tuple_args(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("parameter tuple")
    for name in ("p", "t", "k", "d", "e"):
        group.add_argument("--" + name, type=int, required=True)
    group.add_argument("--lambda", dest="lam", type=int, required=True, metavar="LAMBDA")


def _add_field_args(parser: argparse.ArgumentParser):
    parser.add_argument("--cap", type=int, default=None, help="maximum field size q^k")


def _add_enum_args(parser: argparse.ArgumentParser):
    _add_field_args(parser)
    parser.add_argument("--budget", type=int, default=None,
                        help="maximum number of coordinate evaluations per enumeration")
    parser.add_argument("--force", action="store_true", help="enumerate beyond the budget")
    parser.add_argument("--workers", type=int, default=None, help="worker processes (0 for one per CPU)")
    parser.add_argument("--quiet", "-q", action="store_true", help="suppress progress output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Verify two-zero cyclic code families by exhaustive computation.",
        add_help=True)

    subparsers = parser.add_subparsers(title="commands", dest="command")
    subparsers.required = True

    field_parser = subparsers.add_parser("field", help="Build a field tower and print its description.")
    for name in ("p", "t", "k"):
        field_parser.add_argument("--" + name, type=int, required=True)
    _add_field_args(field_parser)
    field_parser.add_argument("--dump", action="store_true", help="include table checksums")

    inspect_parser = subparsers.add_parser("inspect", help="Validate a tuple and print its derived scalars.")
    _add_tuple_args(inspect_parser)

    build_parser_ = subparsers.add_parser("build", help="Print check polynomial, cosets and code dimensions.")
    _add_tuple_args(build_parser_)
    _add_field_args(build_parser_)

    weights_parser = subparsers.add_parser("weights", help="Enumerate the weight distribution of a code.")
    _add_tuple_args(weights_parser)
    weights_parser.add_argument("--role", choices=[r.value for r in CodeRole], default=CodeRole.C.value)
    _add_enum_args(weights_parser)

    dual_parser = subparsers.add_parser("dual", help="Count dual words of weight one and two.")
    _add_tuple_args(dual_parser)
    dual_parser.add_argument("--role", choices=["C", "Cd", "CD"], default="C")
    _add_field_args(dual_parser)

    moments_parser = subparsers.add_parser("moments", help="Check the power moment identities.")
    _add_tuple_args(moments_parser)
    moments_parser.add_argument("--role", choices=["C", "Cd", "CD"], default="C")
    _add_enum_args(moments_parser)

    sw_parser = subparsers.add_parser("sw", help="Solve the digit-sum conditions for (g, p, s).")
    sw_parser.add_argument("--g", type=int, required=True)
    sw_parser.add_argument("--p", type=int, required=True)
    sw_parser.add_argument("--s", type=int, required=True)
    sw_parser.add_argument("--lambda", dest="lam", type=int, default=None, help="λ for candidate weights")
    sw_parser.add_argument("--d", type=int, default=None, help="d for candidate weights")
    sw_parser.add_argument("--q", type=int, default=None, help="q for candidate weights")

    scan_parser = subparsers.add_parser("scan", help="Analyze every admissible tuple within the budgets.")
    scan_parser.add_argument("--max-q", type=int, default=None)
    scan_parser.add_argument("--max-msgs", type=int, default=None)
    scan_parser.add_argument("--max-n", type=int, default=None)
    scan_parser.add_argument("--out", metavar="FILE.jsonl", required=True, help="JSON lines report")
    scan_parser.add_argument("--csv", metavar="FILE.csv", default=None, help="optional CSV summary")
    _add_enum_args(scan_parser)

    return parser


def configure(args: argparse.Namespace) -> JobConfigLoader:
    """
    Load the packaged defaults and write every given flag into them.
    """
    conf = JobConfigLoader()
    options = [
        ("cap", "field.size_cap"),
        ("budget", "job.budget.evaluations"),
        ("workers", "job.exec.workers"),
        ("max_q", "job.scan.max_q"),
        ("max_msgs", "job.scan.max_msgs"),
        ("max_n", "job.scan.max_n"),
        ("out", "job.output.records"),
        ("csv", "job.output.summary_csv"),
    ]
    for attr, option in options:
        value = getattr(args, attr, None)
        if value is not None:
            conf.set_option(option, value)
    if getattr(args, "force", False):
        conf.set_option("job.budget.force", True)
    if getattr(args, "quiet", False):
        conf.set_option("job.output.progress", False)
    return conf


def _print(data: Dict[str, Any]):
    print(json.dumps(data, ensure_ascii=False, indent=2))


def _params(args: argparse.Namespace):
    return derive(args.p, args.t, args.k, args.d, args.e, args.lam)


def _enum_kwargs(conf: JobConfigLoader) -> Dict[str, Any]:
    return dict(budget=conf.get("job.budget.evaluations"), force=conf.get("job.budget.force"),
                workers=conf.get("job.exec.workers"), chunks=conf.get("job.exec.chunks"))


def cmd_field(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    tower = build_tower(args.p, args.t, args.k, conf.get("field.size_cap"))
    data = OrderedDict([
        ("p", tower.p), ("t", tower.t), ("k", tower.k), ("q", tower.q),
        ("size", tower.order), ("modulus", list(tower.modulus)),
        ("subfield_step", tower.subfield_step),
    ])
    if args.dump:
        data["checksums"] = tower.checksums()
    _print(data)
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    params = _params(args)
    data = params.to_dict()
    data["n2_agrees"] = params.n2_agrees
    data["k_one"] = params.is_k_one
    _print(data)
    return EXIT_OK


def cmd_build(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    params = _params(args)
    tower = build_tower(params.p, params.t, params.k, conf.get("field.size_cap"))
    check = check_poly(params, tower)
    if check.degree != 2 * params.k:
        print("WARNING: check polynomial has degree {}, expected {}".format(check.degree, 2 * params.k),
              file=sys.stderr)

    codes = OrderedDict()
    for role in CodeRole:
        spec = CodeSpec.from_params(role, params, tower)
        codes[role.value] = OrderedDict([("length", spec.length), ("alphabet", spec.alphabet),
                                         ("dim", spec.dimension())])
    data = check.to_dict()
    data["codes"] = codes
    _print(data)
    return EXIT_OK


def cmd_weights(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    params = _params(args)
    tower = build_tower(params.p, params.t, params.k, conf.get("field.size_cap"))
    spec = CodeSpec.from_params(CodeRole(args.role), params, tower)
    _print(weight_distribution(spec, **_enum_kwargs(conf)).to_dict())
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    params = _params(args)
    tower = build_tower(params.p, params.t, params.k, conf.get("field.size_cap"))
    _print(dual_low_weight(CodeSpec.from_params(CodeRole(args.role), params, tower)).to_dict())
    return EXIT_OK


def cmd_moments(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    params = _params(args)
    tower = build_tower(params.p, params.t, params.k, conf.get("field.size_cap"))
    spec = CodeSpec.from_params(CodeRole(args.role), params, tower)
    dist = weight_distribution(spec, **_enum_kwargs(conf))
    dual = dual_low_weight(spec)

    power = power_moment_check(dist, dual.b1, dual.b2_brute)
    full = full_moment_check(dist, macwilliams_transform(dist))
    _print(OrderedDict([
        ("distribution", dist.to_dict()),
        ("b1", dual.b1),
        ("b2", dual.b2_brute),
        ("power_moments", power.to_dict()),
        ("macwilliams", full.to_dict()),
    ]))
    return EXIT_OK if power.ok and full.ok else EXIT_INVARIANT


def cmd_sw(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    context = None
    if None not in (args.lam, args.d, args.q):
        context = WeightContext(lam=args.lam, d=args.d, q=args.q)
    _print(analyze(args.g, args.p, args.s, context).to_dict())
    return EXIT_OK


def cmd_scan(args: argparse.Namespace, conf: JobConfigLoader) -> int:
    try:
        summary = run_in_event_loop(ScanExecutor().run(conf))
    except SinkError as e:
        if getattr(e, "summary", None) is not None:
            _print(e.summary)
        raise
    _print(summary)
    return EXIT_OK


COMMANDS = {
    "field": cmd_field,
    "inspect": cmd_inspect,
    "build": cmd_build,
    "weights": cmd_weights,
    "dual": cmd_dual,
    "moments": cmd_moments,
    "sw": cmd_sw,
    "scan": cmd_scan,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse `argv`, run the selected command and map failures to exit codes.

    :return: 0 on success, 1 if a single-tuple invariant failed or the user interrupted,
             2 on invalid arguments, 3 on I/O failure
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INVALID

    try:
        conf = configure(args)
        return COMMANDS[args.command](args, conf)
    except _DOMAIN_ERRORS as e:
        print("ERROR: {}".format(e), file=sys.stderr)
        return EXIT_INVALID
    except (SinkError, OSError) as e:
        print("ERROR: {}".format(e), file=sys.stderr)
        return EXIT_IO
    except ValueError as e:
        print("ERROR: {}".format(e), file=sys.stderr)
        return EXIT_INVALID
    except (KeyboardInterrupt, SoftKeyboardInterrupt):
        print("Exited upon user request.", file=sys.stderr)
        return EXIT_INVARIANT
