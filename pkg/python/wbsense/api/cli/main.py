"""Command line front end of wbsense.

Usage::

    wbsense optimize --scenario F --problem {p1|p2|p3} [--epsilon X | --delta X] --out F
    wbsense sweep --scenario F --param {epsilon|delta} [--from A --to B --steps N] --out F
    wbsense validate --scenario F [--trials N --seed S --gamma-file F --problem P --out F]
    wbsense simulate --scenario F [--trials N --seed S --occupancy BITS] --out F

Exit codes: 0 success (optimal), 1 iteration limit reached, 2 infeasible,
3 validation error, 4 I/O or parse error (including usage errors).

"""
import argparse
import os
import sys

EXIT_OK = 0
EXIT_MAX_ITERATIONS = 1
EXIT_INFEASIBLE = 2
EXIT_VALIDATION = 3
EXIT_PARSE = 4

_RED = '\033[31m'
_RESET = '\033[0m'


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with the parse-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, "{0}: error: {1}\n".format(self.prog, message))


def _use_color(stream):
    return 'NO_COLOR' not in os.environ and hasattr(stream, 'isatty') and stream.isatty()


def _status_code(status):
    from wbsense.api.optimization.solution import OPTIMAL, INFEASIBLE

    if status == OPTIMAL:
        return EXIT_OK
    if status == INFEASIBLE:
        return EXIT_INFEASIBLE
    return EXIT_MAX_ITERATIONS


def _solve(spec, problem, parameters):
    from wbsense.api.optimization import solve_p1, solve_p2, solve_p3

    return {'p1': solve_p1, 'p2': solve_p2, 'p3': solve_p3}[problem](spec, parameters)


def _print_solution(solution, out):
    from wbsense.api.file_interfaces import format_table, solution_table

    out.write("Problem: {0}. Method: {1}. Status: {2}\n".format(
        solution.problem.upper(), solution.method, solution.status))
    if solution.status == 'infeasible':
        out.write("Infeasible: {0}\n".format(solution.report.message))
        return
    out.write(format_table(*solution_table(solution)) + '\n')
    out.write("Objective: {0:.10g}\n".format(solution.objective))
    out.write("Throughput: {0:.10g}\n".format(solution.throughput))
    out.write("Interference: {0}\n".format(
        ' '.join('{0:.10g}'.format(value) for value in solution.interference)))
    out.write("Slacks: {0}\n".format(' '.join('{0:.3e}'.format(value)
                                             for value in solution.slacks)))
    out.write("KKT residual: {0:.3e}\n".format(solution.kkt_residual))


def cmd_optimize(args, out):
    """Solve the scenario and write the solution as JSON and CSV."""
    from wbsense.api.file_interfaces import load_scenario, write_solution

    scenario = load_scenario(args.scenario)
    spec = scenario.spec
    if args.epsilon is not None:
        spec = spec.with_epsilon(args.epsilon)
    if args.delta is not None:
        spec = spec.with_delta(args.delta)
    solution = _solve(spec, args.problem, scenario.parameters())
    table_name = write_solution(solution, args.out)
    _print_solution(solution, out)
    out.write("Wrote {0} and {1}\n".format(args.out, table_name))
    return _status_code(solution.status)


def cmd_sweep(args, out):
    """Sweep the budget or the floor and write CSV and plot data."""
    from wbsense.api.applications import run_sweep, sweep_values
    from wbsense.api.file_interfaces import format_table, load_scenario

    scenario = load_scenario(args.scenario)
    parameters = scenario.parameters()
    default_range = getattr(parameters.sweep, args.param + '_range')
    start = default_range[0] if args.start is None else args.start
    stop = default_range[1] if args.stop is None else args.stop
    steps = parameters.sweep.steps if args.steps is None else args.steps

    result = run_sweep(scenario.spec, args.param, sweep_values(start, stop, steps), parameters)
    result.write_csv(args.out)
    plot_name = os.path.splitext(args.out)[0] + '.dat'
    result.write_plot_data(plot_name)

    header = result.header
    rows = [[row[0], row[1], row[2], row[-1]] for row in result.rows]
    out.write(format_table([header[0], header[1], header[2], header[-1]], rows) + '\n')
    out.write("Wrote {0} and {1}\n".format(args.out, plot_name))
    return EXIT_OK


def cmd_validate(args, out):
    """Compare analytic and simulated probabilities at optimized or given thresholds."""
    from wbsense.api.applications import validate_thresholds
    from wbsense.api.file_interfaces import format_table, load_scenario, read_thresholds
    from wbsense.api.utils.exceptions import DomainError

    scenario = load_scenario(args.scenario)
    parameters = scenario.parameters()
    trials = _pick(args.trials, scenario.trials, 100000)
    seed = _pick(args.seed, scenario.seed, None)

    if args.gamma_file is not None:
        gamma = read_thresholds(args.gamma_file)
        if len(gamma) != scenario.spec.num_subchannels:
            raise DomainError("The threshold file has {0} values, the scenario {1} subchannels."
                              .format(len(gamma), scenario.spec.num_subchannels))
    else:
        solution = _solve(scenario.spec, args.problem, parameters)
        if solution.status == 'infeasible':
            out.write("Infeasible: {0}\n".format(solution.report.message))
            return EXIT_INFEASIBLE
        gamma = solution.gamma.gamma

    report = validate_thresholds(scenario.spec, gamma, trials, seed, parameters)
    header, rows = report.table()
    color = _use_color(out)

    def highlight(index, line):
        if color and rows[index][-1]:
            return _RED + line + _RESET
        return line

    shown = [row[:-1] + ['yes' if row[-1] else ''] for row in rows]
    out.write(format_table(header, shown, highlight) + '\n')
    out.write("Trials: {0}. Seed: {1}. Flags (|difference| > {2}): {3}\n".format(
        report.trials, report.seed, report.tolerance, report.num_flags))
    if report.note is not None:
        out.write("Note: {0}\n".format(report.note))
    if args.out is not None:
        report.write_csv(args.out)
        out.write("Wrote {0}\n".format(args.out))
    return EXIT_OK


def cmd_simulate(args, out):
    """Simulate the energy statistic and write one row per trial."""
    from wbsense.api.file_interfaces import energies_table, load_scenario, write_csv
    from wbsense.api.simulation import OccupancyVector, make_channel, simulate_energies
    from wbsense.api.utils.exceptions import DomainError

    scenario = load_scenario(args.scenario)
    spec = scenario.spec
    count = spec.num_subchannels
    if args.occupancy is not None:
        if len(args.occupancy) != count or set(args.occupancy) - set('01'):
            raise DomainError("--occupancy needs {0} characters '0' or '1'.".format(count))
        occupancy = OccupancyVector([bit == '1' for bit in args.occupancy])
    else:
        occupancy = scenario.occupancy or OccupancyVector.vacant(count)

    trials = _pick(args.trials, scenario.trials, 1000)
    seed = _pick(args.seed, scenario.seed, None)
    batch = simulate_energies(make_channel(gain_power=spec.gain_power), occupancy, spec.noise,
                              trials, seed, scenario.parameters())
    header, rows = energies_table(batch)
    write_csv(args.out, header, rows)
    out.write("Occupancy: {0}. Trials: {1}. Seed: {2}\n".format(
        ''.join('1' if bit else '0' for bit in occupancy.bits), batch.trials, batch.seed))
    out.write("Wrote {0}\n".format(args.out))
    return EXIT_OK


def _pick(*values):
    for value in values:
        if value is not None:
            return value
    return None


def _build_parser():
    parser = _ArgumentParser(
        prog='wbsense',
        description="Multiband joint detection for wideband spectrum sensing.")
    parser.add_argument('-v', '--verbose', action='store_true',
                        help="Log solver and simulation progress to the console.")
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    optimize = subparsers.add_parser('optimize', help="Optimize the detection thresholds.")
    optimize.add_argument('--scenario', required=True, help="Scenario JSON file.")
    optimize.add_argument('--problem', choices=['p1', 'p2', 'p3'], default='p1',
                          help="p1/p2: maximize throughput, p3: minimize interference.")
    override = optimize.add_mutually_exclusive_group()
    override.add_argument('--epsilon', type=float, help="Interference budget of every group.")
    override.add_argument('--delta', type=float, help="Throughput floor in kbps.")
    optimize.add_argument('--out', required=True, help="Output JSON file.")
    optimize.set_defaults(handler=cmd_optimize)

    sweep = subparsers.add_parser('sweep', help="Sweep the budget or the throughput floor.")
    sweep.add_argument('--scenario', required=True, help="Scenario JSON file.")
    sweep.add_argument('--param', choices=['epsilon', 'delta'], required=True)
    sweep.add_argument('--from', dest='start', type=float, help="First sweep value.")
    sweep.add_argument('--to', dest='stop', type=float, help="Last sweep value.")
    sweep.add_argument('--steps', type=int, help="Number of sweep values.")
    sweep.add_argument('--out', required=True, help="Output CSV file.")
    sweep.set_defaults(handler=cmd_sweep)

    validate = subparsers.add_parser('validate', help="Monte Carlo check of the probabilities.")
    validate.add_argument('--scenario', required=True, help="Scenario JSON file.")
    validate.add_argument('--trials', type=int, help="Trials per batch.")
    validate.add_argument('--seed', type=int, help="Master seed.")
    validate.add_argument('--gamma-file', help="JSON or CSV file with the thresholds.")
    validate.add_argument('--problem', choices=['p1', 'p2', 'p3'], default='p1',
                          help="Problem solved when no threshold file is given.")
    validate.add_argument('--out', help="Output CSV file.")
    validate.set_defaults(handler=cmd_validate)

    simulate = subparsers.add_parser('simulate', help="Write simulated energies.")
    simulate.add_argument('--scenario', required=True, help="Scenario JSON file.")
    simulate.add_argument('--trials', type=int, help="Number of trials.")
    simulate.add_argument('--seed', type=int, help="Master seed.")
    simulate.add_argument('--occupancy', help="One character '0' or '1' per subchannel.")
    simulate.add_argument('--out', required=True, help="Output CSV file.")
    simulate.set_defaults(handler=cmd_simulate)
    return parser


def main(argv=None, out=None):
    """Run the command line interface and return the exit code."""
    import wbsense.api
    from wbsense.api.utils.exceptions import ScenarioParseError

    if out is None:
        out = sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_PARSE

    for name in ('trials', 'steps'):
        if getattr(args, name, None) is not None and getattr(args, name) < 1:
            sys.stderr.write("wbsense: error: --{0} must be positive\n".format(name))
            return EXIT_VALIDATION

    handler = None
    if args.verbose:
        handler = wbsense.api.enable_console_logging(wbsense.api.INFO)
    try:
        return args.handler(args, out)
    except ScenarioParseError as error:
        sys.stderr.write("wbsense: parse error: {0}\n".format(error))
        return EXIT_PARSE
    except (IOError, OSError) as error:
        sys.stderr.write("wbsense: I/O error: {0}\n".format(error))
        return EXIT_PARSE
    except ValueError as error:
        sys.stderr.write("wbsense: validation error: {0}\n".format(error))
        return EXIT_VALIDATION
    finally:
        if handler is not None:
            wbsense.api.LOGGER.removeHandler(handler)


def run():
    """Entry point of the console script."""
    sys.exit(main())


if __name__ == '__main__':
    run()
