"""Command-line front end: ``tlj <command> ...``.

Exit status is 0 on success, 1 when a verify check fails and 2 on usage
errors (bad flags, unreadable files, inadmissible labels).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from .errors import TLError
from .fusion import sixj, truncated_fusion
from .jones_wenzl import jw
from .nets import evaluate_net, fusion_coefficients, load_net, theta_formula
from .scalar import specialize
from .skein import (
    HIMove,
    enumerate_colorings,
    hi_matrix,
    read_spine,
    transport,
)
from .verify import SUITES, VerifyOptions, verify

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _root(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--root expects an integer, got {text!r}")
    if r < 2:
        raise argparse.ArgumentTypeError(f"--root must be at least 2, got {r}")
    return r


def _label(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"labels are non-negative, got {v}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tlj", description="Exact Temperley-Lieb-Jones computations.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_root(sp, required=False):
        sp.add_argument("--root", type=_root, required=required, help="q = exp(pi i / R)")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    s = with_root(sub.add_parser("jw", help="Jones-Wenzl projector"))
    s.add_argument("--n", type=_label, required=True)
    s.add_argument("--pairs", action="store_true", help="print diagrams as pair lists")

    s = with_root(sub.add_parser("theta", help="theta net value"))
    for k in "abc":
        s.add_argument(f"--{k}", type=_label, required=True)

    s = with_root(sub.add_parser("net", help="closed net evaluation"))
    s.add_argument("action", choices=["eval"])
    s.add_argument("file")

    s = with_root(sub.add_parser("fuse", help="fusion coefficients of p_a x p_b"))
    s.add_argument("--a", type=_label, required=True)
    s.add_argument("--b", type=_label, required=True)

    s = with_root(sub.add_parser("sixj", help="recoupling coefficient"))
    for k in ("a", "b", "i", "c", "d", "j"):
        s.add_argument(f"--{k}", type=_label, required=True)

    s = with_root(sub.add_parser("skein", help="skein modules of spines"), required=True)
    s.add_argument("action", choices=["dim", "basis", "hi", "transport"])
    s.add_argument("spine", help="spine JSON file or packaged spine name")
    s.add_argument("--edge", type=_label)
    s.add_argument("--orient", type=int, choices=[0, 1], default=0)
    s.add_argument("--moves", help="JSON list of {edge, orient} objects")
    s.add_argument("--boundary", help='boundary labels as JSON, e.g. {"0": 1}')
    s.add_argument(
        "--sum-boundary",
        action="store_true",
        help="with dim: sum over every assignment of boundary labels",
    )

    s = with_root(sub.add_parser("verify", help="run identity checks"))
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--max-n", type=_label)
    s.add_argument("--max-label", type=_label)
    return p


# ---------------------------------------------------------------------------


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _scalar(x, root):
    return str(x if root is None else specialize(x, root))


def cmd_jw(args):
    p = jw(args.n, args.root)
    terms = [
        {"pairs": [list(pr) for pr in d.pairs], "coefficient": str(c)}
        for d, c in p.terms.items()
    ]
    payload = {"n": args.n, "root": args.root, "terms": terms}
    _emit(args, payload, [p.render(names=not args.pairs)])
    return 0


def cmd_theta(args):
    value = _scalar(theta_formula(args.a, args.b, args.c), args.root)
    _emit(args, {"a": args.a, "b": args.b, "c": args.c, "root": args.root, "value": value}, [value])
    return 0


def cmd_net(args):
    text = _read(args.file)
    net = load_net(text)
    if net.boundary("top") or net.boundary("bottom"):
        raise UsageError("net eval needs a closed net (no boundary vertices)")
    value = str(evaluate_net(net, args.root))
    _emit(args, {"file": args.file, "root": args.root, "value": value}, [value])
    return 0


def cmd_fuse(args):
    if args.root is None:
        pairs = [(k, str(lam)) for k, lam in fusion_coefficients(args.a, args.b)]
    else:
        pairs = [(k, str(lam)) for k, lam in truncated_fusion(args.a, args.b, args.root)]
    payload = {
        "a": args.a,
        "b": args.b,
        "root": args.root,
        "terms": [{"k": k, "coefficient": c} for k, c in pairs],
    }
    _emit(args, payload, [f"{k}: {c}" for k, c in pairs])
    return 0


def cmd_sixj(args):
    value = str(sixj(args.a, args.b, args.i, args.c, args.d, args.j, args.root))
    payload = {k: getattr(args, k) for k in ("a", "b", "i", "c", "d", "j", "root")}
    payload["value"] = value
    _emit(args, payload, [value])
    return 0


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _boundary(args):
    if args.boundary is None:
        return None
    try:
        obj = json.loads(args.boundary)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--boundary is not JSON: {exc}")
    if not isinstance(obj, dict):
        raise UsageError("--boundary must be a JSON object keyed by edge index")
    return obj


def _moves(args):
    if args.moves is None:
        raise UsageError("skein transport needs --moves")
    text = _read(args.moves) if Path(args.moves).exists() else args.moves
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--moves is not JSON: {exc}")
    moves = []
    for m in raw:
        if isinstance(m, dict):
            moves.append(HIMove(int(m["edge"]), int(m.get("orient", 0))))
        else:
            moves.append(HIMove(int(m[0]), int(m[1]) if len(m) > 1 else 0))
    return moves


def _matrix_lines(mat):
    return ["[" + ", ".join(str(x) for x in row) + "]" for row in mat]


def cmd_skein(args):
    try:
        spine = read_spine(args.spine)
    except FileNotFoundError:
        raise UsageError(f"no spine file or packaged spine named {args.spine!r}")
    n = args.root
    bl = _boundary(args)
    if args.action == "dim":
        if args.sum_boundary:
            edges = spine.boundary_edges()
            total = 0
            for labels in itertools.product(range(n - 1), repeat=len(edges)):
                total += enumerate_colorings(spine, n, dict(zip(edges, labels))).dimension
            dim = total
        else:
            dim = enumerate_colorings(spine, n, bl).dimension
        _emit(args, {"spine": args.spine, "root": n, "dimension": dim}, [str(dim)])
        return 0
    if args.action == "basis":
        b = enumerate_colorings(spine, n, bl)
        rows = [list(c.as_tuple()) for c in b.colorings]
        payload = {"spine": args.spine, "root": n, "edges": len(spine.edges), "colorings": rows}
        _emit(args, payload, [" ".join(map(str, r)) for r in rows])
        return 0
    if args.action == "hi":
        if args.edge is None:
            raise UsageError("skein hi needs --edge")
        m = hi_matrix(spine, HIMove(args.edge, args.orient), n, bl)
        payload = {
            "spine": args.spine,
            "root": n,
            "edge": args.edge,
            "orient": args.orient,
            "source": [list(c.as_tuple()) for c in m.source.colorings],
            "target": [list(c.as_tuple()) for c in m.target.colorings],
            "matrix": [[str(x) for x in row] for row in m.entries],
        }
        _emit(args, payload, _matrix_lines(m.entries))
        return 0
    moves = _moves(args)
    end, mat = transport(spine, moves, n, bl)
    payload = {
        "spine": args.spine,
        "root": n,
        "moves": [{"edge": mv.edge, "orient": mv.orientation} for mv in moves],
        "target_spine": end.to_json(),
        "matrix": [[str(x) for x in row] for row in mat],
    }
    _emit(args, payload, _matrix_lines(mat))
    return 0


def cmd_verify(args):
    opts = VerifyOptions(max_n=args.max_n, max_label=args.max_label, root=args.root)
    results = verify(args.suite, opts)
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name}  [{r.grid}]  {r.cases} cases  {r.elapsed:.2f}s")
        for f in r.failures[:5]:
            lines.append(f"      failed at {f}")
    lines.append("all passed" if ok else "some checks failed")
    payload = {"suite": args.suite, "passed": ok, "checks": [r.as_dict() for r in results]}
    _emit(args, payload, lines)
    return 0 if ok else 1


COMMANDS = {
    "jw": cmd_jw,
    "theta": cmd_theta,
    "net": cmd_net,
    "fuse": cmd_fuse,
    "sixj": cmd_sixj,
    "skein": cmd_skein,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TLError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
