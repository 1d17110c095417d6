import argparse
import atexit
import json
import sys
import traceback

import customlogger as logger
from exceptions import AxiomsFail, ConditionsFail, InvalidCategory, ParseError, SkewSpanError
from logic.category import cat_validate
from logic.characterization import (build, enumerate_monoidale_structures, enumerate_rstructures, extract,
                                    roundtrip)
from logic.constructions import category_to_monoidale, monoid_to_monoidale
from logic.fuzz import cross_check, mutants
from logic.simplicial import dec_cat, nerve, simp_validate
from logic.skew_monoidale import verify
from serialization import instance_file
from settings import DEFAULT_CAP, DEFAULT_DEPTH, DEFAULT_FORMAT, DEFAULT_MUTATIONS, DEFAULT_SEED
from static.exit_code import ExitCode
from utils.misc import is_debug_mode, set_debug_flag


@atexit.register
def main_cleanup():
    logger.debug("skewspan exiting")


def excepthook(exc_type, exc_value, exc_tb):
    tb = "".join(traceback.format_exception(exc_type, exc_value, exc_tb))
    logger.critical("ERROR!")
    logger.critical(tb)


class Output:
    def __init__(self, fmt):
        self.fmt = fmt

    @property
    def structured(self):
        return self.fmt == "structured"

    def emit(self, text, document):
        if self.structured:
            print(json.dumps(document, indent=2, ensure_ascii=False, default=str))
        else:
            print(text)


def _load(path, kind):
    instance = instance_file.load(path)
    if instance.kind != kind:
        raise ParseError("{} holds a {}, expected a {}".format(path, instance.kind, kind))
    return instance.value


def _load_category(path):
    c = _load(path, "category")
    report = cat_validate(c)
    if not report.ok:
        raise InvalidCategory(report.summary())
    return c


def _write(args, out, value):
    if args.out is None:
        out.emit(json.dumps(instance_file.dump(value), indent=2, ensure_ascii=False), instance_file.dump(value))
        return
    instance_file.save(args.out, value)
    logger.info("Wrote {}".format(args.out))


def cmd_verify(args, out):
    report = verify(_load(args.path, "monoidale"))
    out.emit(str(report), report.to_dict())
    return ExitCode.SUCCESS if report.all_pass else ExitCode.VERIFICATION_FAILURE


def cmd_extract(args, out):
    _write(args, out, extract(_load(args.path, "monoidale")))
    return ExitCode.SUCCESS


def cmd_build(args, out):
    _write(args, out, build(_load(args.path, "rstructure")))
    return ExitCode.SUCCESS


def cmd_roundtrip(args, out):
    report = roundtrip(_load(args.path, "monoidale"))
    out.emit(str(report), report.to_dict())
    return ExitCode.SUCCESS if report.ok else ExitCode.VERIFICATION_FAILURE


def cmd_enumerate(args, out):
    c = _load_category(args.path)
    found = list(enumerate_rstructures(c, cap=args.cap))
    document = {
        "category": c.name,
        "count": len(found),
        "rstructures": [instance_file.dump(rs) for rs in found],
    }
    lines = ["{} R-structures on {}".format(len(found), c.name or args.path)]
    for i, rs in enumerate(found):
        lines.append("  #{}: R_0 = {}".format(i, {f: y for f, y in rs.R.on_objects.items()}))
    code = ExitCode.SUCCESS
    if args.cross_check:
        direct = sum(1 for _ in enumerate_monoidale_structures(c, cap=args.cap))
        document["monoidale_count"] = direct
        document["counts_agree"] = direct == len(found)
        lines.append("{} verified skew monoidales with the category fixed; counts {}".format(
            direct, "agree" if direct == len(found) else "DISAGREE"))
        if direct != len(found):
            code = ExitCode.VERIFICATION_FAILURE
    out.emit("\n".join(lines), document)
    return code


def cmd_nerve(args, out):
    c = _load_category(args.path)
    S = nerve(c, args.depth)
    report = simp_validate(S)
    sizes = S.level_sizes()
    document = {
        "name": S.name,
        "levels": [[instance_file.encode_element(x) for x in level] for level in S.levels],
        "simplicial": report.to_dict(),
    }
    text = "{}\n{}\n{}".format(S.name, sizes.rename_axis("level").to_frame("simplices").to_string(), report)
    out.emit(text, document)
    return ExitCode.SUCCESS if report.ok else ExitCode.VERIFICATION_FAILURE


def cmd_dec(args, out):
    dec, _ = dec_cat(_load_category(args.path))
    _write(args, out, dec)
    return ExitCode.SUCCESS


def cmd_from_monoid(args, out):
    _write(args, out, monoid_to_monoidale(_load(args.path, "monoid")))
    return ExitCode.SUCCESS


def cmd_from_category(args, out):
    _write(args, out, category_to_monoidale(_load_category(args.path)))
    return ExitCode.SUCCESS


def cmd_fuzz(args, out):
    m = _load(args.path, "monoidale")
    frame = cross_check(mutants(m, count=args.count, seed=args.seed))
    agree = bool(frame["agree"].all()) if len(frame) else True
    out.emit(frame.to_string(index=False) if len(frame) else "no mutants", {
        "instance": m.name,
        "seed": args.seed,
        "mutants": len(frame),
        "all_agree": agree,
        "rows": frame.to_dict(orient="records"),
    })
    return ExitCode.SUCCESS if agree else ExitCode.VERIFICATION_FAILURE


COMMANDS = {
    "verify": (cmd_verify, "check the five axioms with both checkers"),
    "extract": (cmd_extract, "read off the category and R: Dec(C) -> C"),
    "build": (cmd_build, "build a skew monoidale from an rstructure file"),
    "roundtrip": (cmd_roundtrip, "check that build(extract(m)) recovers m"),
    "enumerate": (cmd_enumerate, "list every R-structure on a category"),
    "nerve": (cmd_nerve, "truncated nerve of a category"),
    "dec": (cmd_dec, "decalage of a category"),
    "from-monoid": (cmd_from_monoid, "skew monoidale of a monoid"),
    "from-category": (cmd_from_category, "skew monoidale of a category"),
    "fuzz": (cmd_fuzz, "cross-check both checkers on seeded mutants"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="skewspan", description="Skew monoidales in Span over finite sets")
    parser.add_argument("--format", choices=("text", "structured"), default=DEFAULT_FORMAT)
    parser.add_argument("--debug", action="store_true", help="log at DEBUG level")
    parser.add_argument("--log-file", action="store_true", help="also log to a file under logs/")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("path")
        if name in ("extract", "build", "dec", "from-monoid", "from-category"):
            sub.add_argument("--out", default=None)
        if name == "enumerate":
            sub.add_argument("--cap", type=int, default=DEFAULT_CAP)
            sub.add_argument("--cross-check", action="store_true")
        if name == "nerve":
            sub.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
        if name == "fuzz":
            sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
            sub.add_argument("--count", type=int, default=DEFAULT_MUTATIONS)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.debug:
        set_debug_flag(True)
    if is_debug_mode():
        logger.print_debug()
    if args.log_file:
        logger.log_to_file()
    sys.excepthook = excepthook

    out = Output(args.format)
    handler = COMMANDS[args.command][0]
    logger.info("Running {} on {}".format(args.command, args.path))
    try:
        with logger.timed(args.command):
            code = handler(args, out)
    except (AxiomsFail, ConditionsFail) as e:
        out.emit(str(e.report), e.report.to_dict())
        logger.error(str(e).splitlines()[0])
        return int(ExitCode.VERIFICATION_FAILURE)
    except SkewSpanError as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        return int(ExitCode.INPUT_ERROR)
    logger.info("{} finished with exit code {}".format(args.command, int(code)))
    return int(code)
