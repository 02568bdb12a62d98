"""Command line interface

Every subcommand prints a table in one of :data:`OUTPUT_FORMATS`
to stdout. Warnings and verbose output go to stderr.

Exit codes: 0 success, 1 usage error, 2 input outside the scope of
the dimension formulas (e.g. singular weights), 3 failed verification.
"""
import argparse
import csv
import json
import sys
import warnings

from . import cnvnc, homdim, oracle, schur, symchar, uporder
from ._version import version
from .excpt import UnsupportedWeightError, VerificationFailedError
from .lattice import Context, Weight

#: formats accepted by ``--format``
OUTPUT_FORMATS = ("json", "csv", "plain")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCOPE = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """Argument parser that exits with :data:`EXIT_USAGE` on errors"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


class Table(object):
    def __init__(self, header, records=None, rows=None, lines=None):
        """Output of one subcommand

        Parameters
        ----------
        header: tuple of str
            CSV column names
        records: list of dict
            JSON records (one line each)
        rows: list of list
            CSV rows matching `header`
        lines: list of str
            Plain text lines
        """
        self.header = header
        self.records = records or []
        self.rows = rows or []
        self.lines = lines or []
        #: set if a verification in this table failed
        self.failed = False

    def emit(self, fmt, stream):
        if fmt == "json":
            for rec in self.records:
                stream.write(json.dumps(rec, sort_keys=True) + "\n")
        elif fmt == "csv":
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
        else:
            for line in self.lines:
                stream.write(line + "\n")


def _context(args, weight=None):
    n = args.n
    if n is None:
        if weight is None:
            raise ValueError("Please specify `--n`!")
        n = len(weight)
    elif weight is not None and len(weight) != n:
        raise ValueError("Weight {} does not have n={} entries!".format(
            weight, n))
    return Context(n=n, c=args.c, mode="quantum" if args.quantum else
                   "classical")


def _block_table(lam, ctx):
    rows = homdim.block_dimension_table(lam, ctx)
    table = Table(homdim.BLOCK_CSV_HEADER,
                  records=[r.to_dict() for r in rows],
                  rows=[r.csv_row() for r in rows])
    table.lines.append("Block of {} at {}={} (global dimension {})".format(
        lam, ctx.symbol, ctx.c, homdim.block_global_dimension(lam, ctx)))
    for r in rows:
        if not r.in_scope:
            table.lines.append("  mu={}: singular, out of scope".format(r.mu))
            continue
        table.lines.append(
            "  mu={}: d={} inj L={} proj L={} proj nabla={} inj Delta={} "
            "inj nabla={} proj Delta={}{}".format(
                r.mu, r.d_mu, r.inj_L, r.proj_L, r.proj_nabla, r.inj_delta,
                r.inj_nabla, r.proj_delta,
                " (quantum caveat)" if r.caveat else ""))
    return table


def cmd_dim(args):
    if args.family == "symmetric_power":
        # the "weight" of S^r E is its degree r
        if len(args.weight) != 1 or args.n is None or args.block:
            raise ValueError("S^r E needs `--weight r` and `--n`!")
        ctx = _context(args)
        reports = cnvnc.analyze(args.weight[0], ctx, family=args.family)
    else:
        ctx = _context(args, args.weight)
        reports = cnvnc.analyze(args.weight, ctx, family=args.family,
                                allow_bound=args.bound)
    table = Table(("family", "weight", "invariant", "value", "status"))
    for rep in reports:
        label = rep.label
        table.records.append(rep.to_dict())
        table.rows.append([label.family,
                           str(label.weight if label.weight is not None
                               else label.degree),
                           rep.invariant, rep.value, rep.status])
        table.lines.append("{}({}) = {}{}".format(
            rep.invariant, rep.label, rep.value,
            "" if rep.status == "exact" else " ({})".format(rep.status)))
    if args.block:
        block = _block_table(args.weight, ctx)
        table.records += block.records
        table.lines += block.lines
        # second CSV section with its own header
        table.rows += [[]] + [list(block.header)] + block.rows
    return table


def cmd_schur(args):
    ctx = Context(n=args.n, c=args.c,
                  mode="quantum" if args.quantum else "classical")
    if args.sweep is not None:
        results = list(schur.schur_sweep(ctx, args.sweep,
                                         verbose=args.verbose))
    else:
        if args.r is None:
            raise ValueError("Please specify `--r` or `--sweep`!")
        results = [schur.wfd_schur(ctx, args.r)]
    table = Table(schur.CSV_HEADER,
                  records=[res.to_dict() for res in results],
                  rows=[res.csv_row() for res in results])
    for res in results:
        line = "S({},{}) {}={}: wfd={} glob={} [{}]".format(
            res.n, res.r, ctx.symbol, res.c, res.wfd, res.glob, res.status)
        if res.witness is not None:
            line += " witness {}".format(res.witness)
        table.lines.append(line)
    return table


def _report_table(reports):
    table = Table(("subject", "expected", "observed", "ok"))
    for rep in reports:
        table.records.append(rep.to_dict())
        table.rows.append([rep.subject, rep.expected, rep.observed,
                           str(rep.ok).lower()])
        line = "{:4s} {}".format("ok" if rep.ok else "FAIL", rep.subject)
        if rep.witness is not None:
            line += " | {}".format(rep.witness)
        table.lines.append(line)
        if not rep.ok:
            table.failed = True
    return table


def cmd_verify(args):
    if args.check == "lengths":
        ctx = _context(args)
        reports = list(oracle.length_grid(ctx, args.dmax,
                                          verbose=args.verbose))
    elif args.check == "dformula":
        ctx = _context(args)
        reports = [oracle.verify_d_formula(ctx, args.max_part)]
    elif args.check == "linkage":
        ctx = _context(args, args.weight)
        reports = [oracle.verify_orbit_linkage(args.weight, ctx, args.radius)]
    else:
        return cmd_verify_pieri(args)
    return _report_table(reports)


def cmd_verify_pieri(args):
    ctx = _context(args)
    rep = symchar.verify_pieri_ses(args.m, args.j, ctx)
    record = rep.to_dict()
    table = Table(("lhs", "constituents", "expected", "ok", "message"),
                  records=[record])
    constituents = " + ".join(
        "{}*s{}".format(it["multiplicity"], tuple(it["weight"]))
        if it["multiplicity"] != 1 else "s{}".format(tuple(it["weight"]))
        for it in record["constituents"])
    table.rows.append([rep.lhs, constituents,
                       " + ".join("s{}".format(tuple(e))
                                  for e in record["expected"]),
                       str(rep.ok).lower(), rep.message])
    table.lines.append("{:4s} {} = {} ({})".format(
        "ok" if rep.ok else "FAIL", rep.lhs, constituents, rep.message))
    table.failed = not rep.ok
    return table


def cmd_orbit(args):
    ctx = _context(args, args.weight)
    closure = oracle.orbit_closure(args.weight, ctx, args.radius)
    return Table(("weight",),
                 records=[{"weight": list(w.coords)} for w in closure],
                 rows=[[str(w)] for w in closure],
                 lines=[str(w) for w in closure])


def cmd_chain(args):
    ctx = _context(args, args.weight)
    chain = uporder.maximal_chain(args.weight, ctx, domain=args.domain,
                                  verbose=args.verbose)
    steps = [(k, w, uporder.distance(w, ctx)) for k, w in enumerate(chain)]
    return Table(("step", "weight", "d"),
                 records=[{"weight": list(args.weight.coords),
                           "domain": chain.domain,
                           "length": chain.length,
                           "chain": chain.to_list()}],
                 rows=[[k, str(w), d] for k, w, d in steps],
                 lines=[str(chain)])


def cmd_table(args):
    if args.table == "block":
        ctx = _context(args, args.weight)
        return _block_table(args.weight, ctx)
    npos = homdim.num_positive_roots(args.rank, root_type=args.type)
    header = ("l_w", "gfd_verma", "gfd_simple", "proj_verma",
              "proj_simple_upper", "glob_O")
    table = Table(header)
    for length_w in range(npos + 1):
        dims = homdim.category_O_dims(npos, length_w)
        record = dims.to_dict()
        record["l_w"] = length_w
        table.records.append(record)
        table.rows.append([record[key] for key in header])
        table.lines.append(
            "l(w)={}: gfd M={} gfd L={} proj M={} proj L<={} glob O={}".format(
                length_w, dims.gfd_verma, dims.gfd_simple, dims.proj_verma,
                dims.proj_simple_upper, dims.glob_O))
    return table


def _add_context_args(parser, n_required=False):
    parser.add_argument("--n", type=int, required=n_required,
                        help="rank n of GL_n (default: length of the weight)")
    parser.add_argument("--c", type=int, required=True,
                        help="characteristic p (or order l with --quantum)")
    parser.add_argument("--quantum", action="store_true",
                        help="quantum group at an l-th root of unity")


def _add_weight_arg(parser):
    parser.add_argument("--weight", type=Weight.parse, required=True,
                        help="weight such as 7,0 (use --weight=-1,5 for "
                             "negative entries)")


def build_parser():
    parser = _Parser(prog="schurdim",
                     description="Filtration, Ext and global dimensions "
                                 "from alcove combinatorics.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s {}".format(version))
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="plain",
                        help="output format (default: plain)")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="print progress to stderr (repeatable)")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    dim = sub.add_parser("dim", help="Weyl/good filtration dimensions")
    dim.add_argument("family", choices=homdim.available + ["symmetric_power"])
    _add_weight_arg(dim)
    _add_context_args(dim)
    dim.add_argument("--block", action="store_true",
                     help="also print the block dimension table")
    dim.add_argument("--bound", action="store_true",
                     help="report the chain-length bound for singular "
                          "weights of nabla")
    dim.set_defaults(func=cmd_dim)

    sch = sub.add_parser("schur", help="dimensions of Schur algebras")
    _add_context_args(sch, n_required=True)
    sch.add_argument("--r", type=int, help="degree r")
    sch.add_argument("--sweep", type=int, metavar="RMAX",
                     help="one row for every r = 0..RMAX")
    sch.set_defaults(func=cmd_schur)

    ver = sub.add_parser("verify", help="brute-force cross-checks")
    checks = ver.add_subparsers(dest="check", metavar="check")
    checks.required = True
    lengths = checks.add_parser("lengths", help="d = l = lbar on a grid")
    _add_context_args(lengths, n_required=True)
    lengths.add_argument("--dmax", type=int, required=True)
    dform = checks.add_parser("dformula",
                              help="closed form versus hyperplane count")
    _add_context_args(dform, n_required=True)
    dform.add_argument("--max-part", type=int, required=True)
    link = checks.add_parser("linkage", help="reflection orbit of a weight")
    _add_weight_arg(link)
    _add_context_args(link)
    link.add_argument("--radius", type=int, required=True)
    pieri = checks.add_parser("pieri", help="characters of the hook sequence")
    _add_context_args(pieri, n_required=True)
    pieri.add_argument("--m", type=int, required=True)
    pieri.add_argument("--j", type=int, required=True)
    ver.set_defaults(func=cmd_verify)

    orb = sub.add_parser("orbit", help="reflection closure inside a box")
    _add_weight_arg(orb)
    _add_context_args(orb)
    orb.add_argument("--radius", type=int, required=True)
    orb.set_defaults(func=cmd_orbit)

    chn = sub.add_parser("chain", help="maximal up-arrow chain")
    _add_weight_arg(chn)
    _add_context_args(chn)
    chn.add_argument("--domain", choices=uporder.DOMAINS, default="X")
    chn.set_defaults(func=cmd_chain)

    tab = sub.add_parser("table", help="dimension tables")
    tables = tab.add_subparsers(dest="table", metavar="table")
    tables.required = True
    odims = tables.add_parser("o-dims", help="principal block of category O")
    odims.add_argument("--type", default="A", choices=("A",))
    odims.add_argument("--rank", type=int, required=True)
    block = tables.add_parser("block", help="block dimension table")
    _add_weight_arg(block)
    _add_context_args(block)
    tab.set_defaults(func=cmd_table)
    return parser


def main(argv=None, stdout=None):
    """Run the command line interface and return the exit code"""
    stdout = sys.stdout if stdout is None else stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            table = args.func(args)
        except UnsupportedWeightError as exc:
            print("error: {}".format(exc), file=sys.stderr)
            return EXIT_SCOPE
        except VerificationFailedError as exc:
            print("verification failed: {}".format(exc), file=sys.stderr)
            return EXIT_VERIFY
        except (ValueError, OverflowError) as exc:
            print("error: {}".format(exc), file=sys.stderr)
            return EXIT_USAGE
    for warn in caught:
        print("warning: {}".format(warn.message), file=sys.stderr)
    table.emit(args.format, stdout)
    return EXIT_VERIFY if table.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
