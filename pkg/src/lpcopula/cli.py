"""Command-line front end: ``python3 -m lpcopula <command> ...``.

Data arguments are a headed CSV path or ``builtin:NAME`` for a bundled
fixture.  Exit status is 0 on success, 1 on a data error and 2 on a usage
error.
"""

import argparse
import json
import sys

from . import bench, inference, model, reference
from .basis import basis_tsv, build_basis, default_degree
from .datasets import CATEGORY_ORDERS, bundled_path, ingest, parse_categories
from .margins import fit_margin


def _dump_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def _load(args, columns):
    cats = {}
    path = args.data
    if path.startswith("builtin:"):
        name = path[len("builtin:"):]
        cats.update(CATEGORY_ORDERS.get(name, {}))
        path = bundled_path(name)
    cats.update(parse_categories(args.cat))
    return ingest(path, columns=columns, categories=cats)


def _xy(args):
    if (args.x is None) != (args.y is None):
        raise ValueError("give both --x and --y or neither")
    ds = _load(args, [args.x, args.y] if args.x else None)
    if len(ds.names) < 2:
        raise ValueError("need two columns")
    return ds.names[0], ds.names[1], ds[ds.names[0]], ds[ds.names[1]]


def _denoise(args, default):
    return default if args.denoise is None else args.denoise


def _family(args):
    if args.family is None:
        raise ValueError("--family is required")
    if args.family == "khoudraji":
        if args.base is None or args.lam1 is None or args.lam2 is None:
            raise ValueError("khoudraji needs --base, --lam1 and --lam2")
        base = reference.make_family(args.base, *args.param)
        return reference.khoudraji(base, args.lam1, args.lam2, convention=args.convention)
    return reference.make_family(args.family, *args.param)


def _matrix_tsv(t):
    lines = ["j\tk\tlp\tselected"]
    for j in range(t.coeffs.shape[0]):
        for k in range(t.coeffs.shape[1]):
            lines.append("%d\t%d\t%r\t%d" % (j + 1, k + 1, float(t.coeffs[j, k]),
                                             int(t.selected[j, k])))
    return "\n".join(lines) + "\n"


def _result_tsv(res):
    lines = ["statistic\t%r" % res.statistic, "scaled\t%r" % res.scaled,
             "dof\t%d" % res.dof, "p_value\t%r" % res.p_value]
    return "\n".join(lines) + "\n"


def cmd_basis(args):
    ds = _load(args, [args.x] if args.x else None)
    g = fit_margin(ds[ds.names[0]])
    b = build_basis(g, default_degree(g, args.m))
    if args.format == "json":
        return _dump_json({"values": g.values.tolist(), "p": g.masses.tolist(),
                           "midcdf": g.midcdf.tolist(), "T": b.table.T.tolist()})
    return basis_tsv(b)


def cmd_fit(args):
    _, _, x, y = _xy(args)
    mod = model.fit_copula(x, y, m=args.m, denoise=_denoise(args, True), clip=args.clip)
    if args.grid is not None:
        grid = model.density_grid(mod, args.grid)
        if args.format is None:
            args.format = "tsv"
        if args.format == "json":
            return _dump_json({"L": args.grid, "density": grid.tolist()})
        return model.grid_tsv(grid, matrix=args.format == "matrix")
    if args.format in ("tsv", "matrix"):
        return _matrix_tsv(mod.comeans)
    return _dump_json(mod.comeans.to_dict())


def cmd_infor(args):
    _, _, x, y = _xy(args)
    denoised = _denoise(args, False)
    mod = model.fit_copula(x, y, m=args.m, denoise=denoised)
    res = inference.lpinfor(mod.comeans, denoised=denoised)
    return _result_tsv(res) if args.format == "tsv" else _dump_json(res.to_dict())


def cmd_sym(args):
    _, _, x, y = _xy(args)
    mod = model.fit_copula(x, y, m=args.m, denoise=False)
    res = inference.lpsym(mod.comeans)
    return _result_tsv(res) if args.format == "tsv" else _dump_json(res.to_dict())


def cmd_spearman(args):
    _, _, x, y = _xy(args)
    res = inference.generalized_spearman(x, y)
    if args.format == "tsv":
        return "".join("%s\t%r\n" % kv for kv in res.to_dict().items())
    return _dump_json(res.to_dict())


def cmd_maxcorr(args):
    _, _, x, y = _xy(args)
    mod = model.fit_copula(x, y, m=args.m, denoise=_denoise(args, True))
    mc = model.max_correlation(mod, x, y)
    if args.format == "tsv":
        lines = ["side\tvalue\tscore"]
        lines += ["phi\t%r\t%r" % (float(a), float(b))
                  for a, b in zip(mc.phi_values, mc.phi_scores)]
        lines += ["psi\t%r\t%r" % (float(a), float(b))
                  for a, b in zip(mc.psi_values, mc.psi_scores)]
        return "\n".join(lines) + "\n"
    return _dump_json(mc.to_dict())


def cmd_tree(args):
    cols = [c.strip() for c in args.cols.split(",")] if args.cols else None
    ds = _load(args, cols)
    tree = model.fit_tree([ds[c] for c in ds.names], m=args.m,
                          denoise=_denoise(args, True))
    edges = [{"i": ds.names[i], "j": ds.names[j], "weight": w,
              "comeans": mod.comeans.to_dict()} for i, j, mod, w in tree.edges]
    if args.format == "tsv":
        return "".join("%s\t%s\t%r\n" % (e["i"], e["j"], e["weight"]) for e in edges)
    return _dump_json({"variables": ds.names, "edges": edges})


def cmd_simulate(args):
    fam = _family(args)
    uv = reference.sample(fam, args.n, args.seed)
    sep = "\t" if args.format == "tsv" else ","
    return "u%sv\n" % sep + "".join("%r%s%r\n" % (float(a), sep, float(b)) for a, b in uv)


def cmd_bench(args):
    if args.timing_only:
        rows = bench.run_timing(args.timing_only, m=args.m, seed=args.seed)
        if args.format == "json":
            return _dump_json([{"n": n, "seconds": s} for n, s in rows])
        return "".join("%d\t%.6f\n" % r for r in rows)
    cfg = bench.BenchConfig(_family(args), n=args.n, B=args.B, L=args.L, m=args.m,
                            seed=args.seed, denoise=_denoise(args, True))
    rep = bench.run_miae(cfg, workers=args.workers)
    if args.format == "text":
        return rep.to_text()
    return rep.to_json(timing=args.timing) + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=4, help="basis degree per margin")
    common.add_argument("--denoise", action=argparse.BooleanOptionalAction, default=None,
                        help="keep only BIC-selected comeans")
    common.add_argument("--out", help="write output here instead of stdout")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("data", help="CSV path with header, or builtin:NAME")
    data.add_argument("--cat", action="append", metavar="COL=a,b,c",
                      help="declare the category order of a column")

    xy = argparse.ArgumentParser(add_help=False)
    xy.add_argument("--x", help="first column (default: first in file)")
    xy.add_argument("--y", help="second column (default: second in file)")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family",
                     choices=sorted(reference.FAMILIES) + ["khoudraji"])
    fam.add_argument("--param", type=float, nargs="*", default=[])
    fam.add_argument("--base", choices=sorted(reference.FAMILIES),
                     help="base family for khoudraji")
    fam.add_argument("--lam1", type=float)
    fam.add_argument("--lam2", type=float)
    fam.add_argument("--convention", choices=["base", "complement"], default="base")
    fam.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="lpcopula", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, parents, formats, help):
        sp = sub.add_parser(name, parents=parents, help=help)
        sp.add_argument("--format", choices=formats,
                        help="output format (default: %s)" % formats[0])
        sp.set_defaults(func=fn, default_format=formats[0])
        return sp

    sp = add("basis", cmd_basis, [common, data], ["tsv", "json"], "LP basis table of one column")
    sp.add_argument("--x", help="column (default: first in file)")
    sp = add("fit", cmd_fit, [common, data, xy], ["json", "tsv", "matrix"],
             "comean matrix or density grid")
    sp.add_argument("--grid", type=int, metavar="L",
                    help="emit an L x L density grid (TSV unless --format is given)")
    sp.add_argument("--clip", action="store_true", help="clip negative density and renormalize")
    add("infor", cmd_infor, [common, data, xy], ["json", "tsv"], "LPINFOR dependence test")
    add("sym", cmd_sym, [common, data, xy], ["json", "tsv"], "LPSym symmetry test")
    add("spearman", cmd_spearman, [common, data, xy], ["json", "tsv"],
        "mid-rank Spearman correlation")
    add("maxcorr", cmd_maxcorr, [common, data, xy], ["json", "tsv"],
        "LP maximal correlation and transformations")
    sp = add("tree", cmd_tree, [common, data], ["json", "tsv"], "maximum spanning tree copula")
    sp.add_argument("--cols", help="comma-separated columns (default: all)")
    sp = add("simulate", cmd_simulate, [common, fam], ["csv", "tsv"],
             "draw a sample from a reference copula")
    sp.add_argument("--n", type=int, required=True)
    sp = add("bench", cmd_bench, [common, fam], ["json", "text"], "Monte-Carlo MIAE benchmark")
    sp.add_argument("--n", type=int, default=1000)
    sp.add_argument("--B", type=int, default=250)
    sp.add_argument("--L", type=int, default=50)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="include per-fit seconds")
    sp.add_argument("--timing-only", type=int, nargs="+", metavar="N",
                    help="only time fits at these sample sizes")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.format is None and not (args.command == "fit" and args.grid is not None):
        args.format = args.default_format
    try:
        text = args.func(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
