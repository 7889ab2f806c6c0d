import argparse
import sys
import traceback

sys.path.append('.')  # add the current project to the python path to be runnable in cmd-line

from config.ExperimentConfig import ExperimentConfig
from harness.Runner import Runner
from harness.Sweep import Sweep
from harness.Validation import Validation
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.SweepAxis import SweepAxis
from utils.ValidationSuite import ValidationSuite
from utils.constants import EXIT_SUCCESS, EXIT_FAILURE, EXIT_CONFIG_ERROR
from utils.setup_logger import log


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Count-based exploration through hashing: experiments, sweeps and validation suites.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="Run every seed of an experiment config.")
    run_parser.add_argument("config", help="Set the path to the experiment config file (key = value lines).")
    run_parser.add_argument("--resume", help="Continue each seed from the checkpoints of a previous run in the results directory.",
                            action="store_true")

    sweep_parser = subparsers.add_parser("sweep", help="Run an experiment config once per value of one axis.")
    sweep_parser.add_argument("config", help="Set the path to the base experiment config file.")
    sweep_parser.add_argument("--axis", help="Set the swept axis among " + str([axis.value for axis in SweepAxis]),
                              choices=[axis.value for axis in SweepAxis], required=True)
    sweep_parser.add_argument("--values", help="Set the comma-separated values of the axis.", required=True)

    for sub_parser in (run_parser, sweep_parser):
        sub_parser.add_argument("--seed", type=int, help="Replace the seeds of the config by this single seed.")
        sub_parser.add_argument("--out-dir", dest="out_dir", help="Set the output directory (replaces output_dir).")
        sub_parser.add_argument("--jobs", type=int, default=1, help="Set the number of worker processes.")

    validate_parser = subparsers.add_parser("validate", help="Run the statistical and numerical property suites.")
    validate_parser.add_argument("suite", help="Set the suite among " + str([suite.value for suite in ValidationSuite]),
                                 choices=[suite.value for suite in ValidationSuite])
    validate_parser.add_argument("--seed", type=int, default=0, help="Set the seed of the suites.")
    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    config = ExperimentConfig.from_file(filepath=args.config)
    config.set_from_parameters(args=args)
    return config


def cmd_run(args: argparse.Namespace) -> int:
    Runner(config=load_config(args=args), jobs=args.jobs, resume=args.resume).run()
    return EXIT_SUCCESS


def cmd_sweep(args: argparse.Namespace) -> int:
    sweep = Sweep(config=load_config(args=args), axis=SweepAxis(args.axis), values=args.values.split(","), jobs=args.jobs)
    comparison = sweep.run()
    return EXIT_FAILURE if Sweep.has_failures(comparison=comparison) else EXIT_SUCCESS


def cmd_validate(args: argparse.Namespace) -> int:
    results = Validation(seed=args.seed).run(suite=ValidationSuite(args.suite))
    print(Validation.report(results=results))
    return EXIT_SUCCESS if Validation.all_passed(results=results) else EXIT_FAILURE


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args=args)
        elif args.command == "sweep":
            return cmd_sweep(args=args)
        else:
            return cmd_validate(args=args)
    except ExplorationError as error:
        log.error("%s", error)
        log.debug(traceback.format_exc())
        return EXIT_CONFIG_ERROR if error.kind == ErrorKind.CONFIG_INVALID else EXIT_FAILURE
    except Exception as error:
        log.error("The run failed: %s", error)
        log.debug(traceback.format_exc())
        return EXIT_FAILURE


if __name__ == '__main__':
    # python3 src/main.py run configs/chain-simhash.cfg
    # python3 src/main.py sweep configs/gridworld-k-sweep.cfg --axis k --values 4,16,64,256
    # python3 src/main.py validate all
    sys.exit(main())
