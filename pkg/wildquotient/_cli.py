# wildquotient - Verification Toolkit for Wild Quotient Surface Singularities
#
# Copyright (C) 2026 wildquotient contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

import argparse
import datetime
import logging
import pathlib
import sys
import typing

import wildquotient.curve
import wildquotient.graph
import wildquotient.group
import wildquotient.local
import wildquotient.report
import wildquotient.rep
from wildquotient.exceptions import VerificationError
from wildquotient.options import FieldKind

_LOGGER = logging.getLogger(__name__)

_DEFAULT_Q_LIST = (2, 3, 4, 5, 7, 8, 9)


def _q_list(value: str) -> typing.List[int]:
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers (got {value!r})"
        ) from exc


def _init_logging(args: argparse.Namespace) -> None:
    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.INFO,
        format="%(asctime)s:%(levelname)s:%(name)s:%(funcName)s:%(message)s"
        if args.debug
        else "%(message)s",
        datefmt="%Y-%m-%dT%H:%M:%S%z",
    )


def _cmd_verify(args: argparse.Namespace) -> bool:
    q_list = args.q or list(_DEFAULT_Q_LIST)
    for q in q_list:
        # reject every q before running the first suite
        wildquotient.group.check_desk_scale(q)
    reports = []
    for q in q_list:
        report = wildquotient.report.verify(q, fmax=args.fmax, threads=args.threads)
        for claim in report.claims:
            print(
                f"q={q} {claim.id:<34} {claim.status.value}"
                f" observed={claim.observed} expected={claim.expected}"
            )
        _LOGGER.info("q=%d: %s", q, "pass" if report.overall else "FAIL")
        reports.append(report)
    if args.json:
        args.json.write_text(
            wildquotient.report.dumps(
                reports, datetime.datetime.now(datetime.timezone.utc)
            )
        )
        _LOGGER.info("wrote %s", args.json)
    return all(report.overall for report in reports)


def _cmd_group(args: argparse.Namespace) -> bool:
    for q in args.q:
        group = wildquotient.group.build_group(q)
        census = wildquotient.group.subgroup_census(group)
        print(f"q={q}: |G| = {len(group)} over {group.field}")
        print(
            f"  |Z| = {len(census.center)},"
            f" |[G,G]| = {len(census.commutator_subgroup)},"
            f" |Phi(G)| = {len(census.frattini)}"
        )
        print(f"  exponent {wildquotient.group.exponent(group)}")
        print(f"  {len(group.classes)} conjugacy classes")
        print(f"  [Aut(C) : G] = {wildquotient.group.sylow_cofactor(q)}")
        readings = wildquotient.group.p_power_readings(group)
        print(
            "  p-th powers agree with closed form for r-exponent "
            + ", ".join(label for label, agrees in readings.items() if agrees)
        )
        if q == 2:
            print(f"  {wildquotient.group.involution_count(group)} involution(s)")
        wildquotient.group.verify_commutator_pairing(group)
    return True


def _cmd_ramify(args: argparse.Namespace) -> bool:
    for q in args.q:
        wildquotient.group.check_desk_scale(q)
        profile = wildquotient.local.filtration(q)
        print(f"q={q}:")
        for i, order in profile.filtration:
            print(f"  |G_{i}| = {order}")
        conductors = wildquotient.rep.cohomology_swan_conductor(q)
        print(
            f"  Swan conductor of H^1: {conductors.defining_sum}"
            f" (closed form {conductors.closed_form})"
        )
        print(
            "  series composition follows the "
            f"{wildquotient.local.action_convention(q).value} group law"
        )
    return True


def _cmd_reps(args: argparse.Namespace) -> bool:
    for q in args.q:
        wildquotient.group.check_desk_scale(q)
        print(f"q={q}:")
        for field_kind in FieldKind:
            census = wildquotient.rep.basic_set(q, field_kind)
            wildquotient.rep.wedderburn_audit(census)
            entries = ", ".join(
                f"{entry.count} x {entry.label}"
                f" (deg {entry.degree}, End {entry.endo_dim})"
                for entry in census.entries
            )
            print(
                f"  {field_kind.value}:"
                f" {wildquotient.rep.irr_count_by_orbits(q, field_kind)} irreducible,"
                f" {entries}"
            )
        dims = wildquotient.rep.invariant_dims(q)
        print(
            f"  dim H^1^G = {dims.h1_g}, dim H^1^Z = {dims.h1_z},"
            f" dim (H^1 x H^1)^G = {dims.h1_tensor_h1_g}"
        )
        wildquotient.rep.trace_vs_lefschetz(q)
        wildquotient.rep.cohomology_decomposition(q)
    return True


def _cmd_curve(args: argparse.Namespace) -> bool:
    for q in args.q:
        spec = wildquotient.curve.curve_spec(q)
        print(f"q={q}: genus {spec.genus}, b1 = {spec.b1}")
        print(f"  generic fiber {wildquotient.curve.generic_fiber_equation(q)}")
        report = wildquotient.curve.verify_supersingular(
            q, args.fmax, threads=args.threads
        )
        for record in report.records:
            print(f"  #C(F_{q}^{2 * record.f}) = {record.count}")
        for f in report.skipped:
            print(f"  #C(F_{q}^{2 * f}) skipped, field too large")
        if report.literal is not None:
            print(
                f"  y^{q} - y = x^{q + 1} has {report.literal.count} points"
                f" over F_{q}^{2 * report.literal.f}"
            )
        print(f"  all Frobenius eigenvalues over F_{q * q} equal {report.sign}*{q}")
    return True


def _cmd_hj(args: argparse.Namespace) -> bool:
    hj_type = wildquotient.graph.cf_expand(args.m, args.b)
    reversed_type = wildquotient.graph.reversed_type(hj_type)
    chain = wildquotient.graph.chain_graph(hj_type.expansion)
    pi1_order = wildquotient.graph.local_pi1_order(args.m, args.p)
    print(f"{args.m}/{args.b} = {list(hj_type.expansion)}")
    print(
        f"reversed: {reversed_type.m}/{reversed_type.b}"
        f" = {list(reversed_type.expansion)}"
    )
    factors = wildquotient.graph.discriminant_group(chain)
    print("discriminant group: " + " x ".join(f"Z/{factor}" for factor in factors))
    print(f"fundamental cycle: {list(wildquotient.graph.fundamental_cycle(chain))}")
    print(f"local fundamental group order: {pi1_order}")
    return True


def _cmd_fiber(args: argparse.Namespace) -> bool:
    for q in args.q:
        fiber = wildquotient.graph.solve_self_intersections(
            wildquotient.graph.build_fiber_graph(q)
        )
        if args.dot:
            path = args.dot if len(args.q) == 1 else _suffixed(args.dot, q)
            path.write_text(fiber.to_dot(name=f"fiber_q{q}"))
            _LOGGER.info("wrote %s", path)
        else:
            print(f"q={q}: {len(fiber)} components")
            for vertex in fiber.vertices:
                print(
                    f"  {vertex.label:<8} m={vertex.multiplicity:<3}"
                    f" s={vertex.self_intersection:<4}"
                    f" -- {' '.join(fiber.neighbors(vertex.label))}"
                )
        index = wildquotient.graph.kodaira_i_star_index(fiber)
        _LOGGER.info(
            "q=%d: %d nodes%s",
            q,
            wildquotient.graph.node_count(fiber),
            "" if index is None else f", Kodaira type I*_{index}",
        )
    return True


def _suffixed(path: pathlib.Path, q: int) -> pathlib.Path:
    return path.with_name(f"{path.stem}_q{q}{path.suffix}")


def _cmd_invariants(args: argparse.Namespace) -> bool:
    for q in args.q:
        wildquotient.group.check_desk_scale(q)
        invariants = wildquotient.graph.surface_invariants(q)
        print(
            f"q={q}: e = {invariants.e}, K^2 = {invariants.K2}, rho = {invariants.rho},"
            f" c = {invariants.components_c}, r = {invariants.mw_rank_r}"
        )
    return True


def _add_q_arg(argparser: argparse.ArgumentParser, required: bool = True) -> None:
    argparser.add_argument(
        "--q",
        type=_q_list,
        required=required,
        metavar="Q[,Q...]",
        help="prime power(s) q <= 9",
    )


def _add_point_count_args(argparser: argparse.ArgumentParser) -> None:
    argparser.add_argument("--fmax", type=int, default=3)
    argparser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for the x-loop of point counting",
    )


def _build_argparser() -> argparse.ArgumentParser:
    argparser = argparse.ArgumentParser(
        description="Verifies the structure of the wild quotient of the Hermitian"
        " curve y^q - y = x^(q+1) by its Sylow p-subgroup at desk scale.",
        allow_abbrev=False,
    )
    argparser.add_argument("-d", "--debug", action="store_true")
    subparsers = argparser.add_subparsers(dest="command_name", required=True)
    verify_parser = subparsers.add_parser(
        "verify", help="run every check and report one claim per statement"
    )
    _add_q_arg(verify_parser, required=False)
    verify_parser.add_argument("--json", type=pathlib.Path, metavar="PATH")
    _add_point_count_args(verify_parser)
    verify_parser.set_defaults(command=_cmd_verify)
    group_parser = subparsers.add_parser("group", help="structure of G")
    _add_q_arg(group_parser)
    group_parser.set_defaults(command=_cmd_group)
    ramify_parser = subparsers.add_parser(
        "ramify", help="higher ramification groups and Swan conductor"
    )
    _add_q_arg(ramify_parser)
    ramify_parser.set_defaults(command=_cmd_ramify)
    reps_parser = subparsers.add_parser("reps", help="representations of G and H^1(C)")
    _add_q_arg(reps_parser)
    reps_parser.set_defaults(command=_cmd_reps)
    curve_parser = subparsers.add_parser("curve", help="point counts of C")
    _add_q_arg(curve_parser)
    _add_point_count_args(curve_parser)
    curve_parser.set_defaults(command=_cmd_curve)
    hj_parser = subparsers.add_parser("hj", help="Hirzebruch-Jung singularity m/b")
    hj_parser.add_argument("m", type=int)
    hj_parser.add_argument("b", type=int)
    hj_parser.add_argument(
        "--p", type=int, default=1, help="characteristic exponent (default: 1)"
    )
    hj_parser.set_defaults(command=_cmd_hj)
    fiber_parser = subparsers.add_parser(
        "fiber", help="dual graph of the singular fiber"
    )
    _add_q_arg(fiber_parser)
    fiber_parser.add_argument("--dot", type=pathlib.Path, metavar="PATH")
    fiber_parser.set_defaults(command=_cmd_fiber)
    invariants_parser = subparsers.add_parser(
        "invariants", help="Chern numbers and Picard number of the quotient surface"
    )
    _add_q_arg(invariants_parser)
    invariants_parser.set_defaults(command=_cmd_invariants)
    return argparser


def main() -> None:
    args = _build_argparser().parse_args()
    _init_logging(args)
    _LOGGER.debug("args=%r", args)
    try:
        passed = args.command(args)
    except ValueError as exc:
        _LOGGER.error("%s", exc)
        sys.exit(2)
    except VerificationError as exc:
        _LOGGER.error("%s: %s", type(exc).__name__, exc)
        sys.exit(1)
    if not passed:
        sys.exit(1)
