#!/usr/bin/env python3
"""
Run one verification job from the command line.

Examples:
  python scripts/run_job.py --corpus split-1-id --task check-axioms
  python scripts/run_job.py --input dual.cat --task verify-theorem --format txt
"""

import argparse
import os
import sys
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.config import Config, EReading, OutputFormat, Task
from src.corpus import CORPUS
from src.models import Budget, JobConfig
from src.runner import run_job, write_report
from src.utils import configure_logging, console_progress

VERDICT_ICONS = {'pass': '✅', 'fail': '❌', 'inconclusive': '❔'}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Bounded verification of n-angulated structures")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="category file")
    source.add_argument("--corpus", choices=sorted(CORPUS), help="built-in corpus entry")
    parser.add_argument("--task", required=True, choices=Task.ALL)
    parser.add_argument("--n", type=int, default=None, help="overrides the n= line of the input")
    parser.add_argument("--cap-objects", type=int, default=Config.DEFAULT_CAP_OBJECTS)
    parser.add_argument("--cap-solutions", type=int, default=Config.DEFAULT_CAP_SOLUTIONS)
    parser.add_argument("--cap-instances", type=int, default=Config.DEFAULT_CAP_INSTANCES)
    parser.add_argument("--seed", type=int, default=Config.DEFAULT_SEED)
    parser.add_argument("--exhaustive", action="store_true",
                        help="treat the caps as covering the search space (allows definite negatives)")
    parser.add_argument("--e-reading", choices=[EReading.EXACT, EReading.ALL], default=EReading.EXACT)
    parser.add_argument("--output", default=None)
    parser.add_argument("--format", default="json", choices=["json", "csv", "txt"])
    parser.add_argument("--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    print("📐 n-Angulation Verifier")
    print("=" * 50)
    print(f"📄 Input: {args.input or 'corpus:' + args.corpus}")
    print(f"🧪 Task: {args.task}")

    try:
        budget = Budget(args.cap_objects, args.cap_solutions, args.cap_instances, args.seed, args.exhaustive)
        config = JobConfig(
            task=args.task,
            input_path=args.input,
            corpus=args.corpus,
            n=args.n,
            budget=budget,
            output_path=args.output,
            output_format=getattr(OutputFormat, args.format.upper()),
            e_reading=args.e_reading,
        )
    except ValueError as e:
        print(f"❌ Invalid arguments: {e}")
        return 3
    print()

    report = run_job(config, console_progress)
    path = write_report(report, config)

    print()
    if report.input_error:
        print(f"❌ Input error: {report.input_error}")
    for result in report.results:
        print(f"   {VERDICT_ICONS.get(result.verdict, '')} {result.name}: {result.verdict}")
    print(f"\n📊 Verdict: {report.verdict} (exit {report.exit_code})")
    print(f"📄 Report: {path}")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
