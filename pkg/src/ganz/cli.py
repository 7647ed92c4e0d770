"""Command-line interface: ``ganz <command> [flags]``.

Exit codes: 0 valid / pass / no violation, 1 invalid / refuted / violation,
2 usage error, 3 degenerate input (degenerate direction, empty sample,
no residue order found).
"""

from __future__ import annotations

import argparse
import io
import sys
from fractions import Fraction

from ganz import kernels
from ganz.baer_krull import HypothesisViolated, sufficiency_pipeline
from ganz.certfile import dumps, load
from ganz.certificates import (
    ConeCert,
    RadicalCert,
    SetDescription,
    cone_value,
    generator_value,
    handelman_search,
    verify_cone_pointwise,
    verify_radical_cert,
)
from ganz.errors import (
    BudgetExceeded,
    CertificateFormatError,
    DegenerateDirection,
    DivisionByZero,
    GanzError,
    Indeterminate,
    NotDefinedAt,
    OrderNotFound,
    ParseError,
    StructuralError,
)
from ganz.ovf_core import INF, KElem
from ganz.parser import format_point, max_var_index, parse, parse_point
from ganz.probe import (
    Grid,
    Pseudorandom,
    SampleStrategy,
    boundedness_probe,
    integrality_probe,
    sample_set,
)
from ganz.ratfunc import RatFunc
from ganz.valuations import NearPoint, WeightedGauss

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _split_set(text: str):
    """``"p: e; e | g: e; e"`` -> (p-texts, g-texts)."""
    p, g = [], []
    if not text or not text.strip():
        return p, g
    for section in text.split("|"):
        if ":" not in section:
            raise UsageError(f"set section {section.strip()!r} lacks a 'p:' or 'g:' label")
        label, body = section.split(":", 1)
        label = label.strip()
        items = [t.strip() for t in body.split(";") if t.strip()]
        if label == "p":
            p += items
        elif label == "g":
            g += items
        else:
            raise UsageError(f"unknown set section {label!r}")
    return p, g


def _ints(text: str):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"expected a rational number, got {text!r}") from exc


class Context:
    """Parsed flags with a common ambient variable count."""

    def __init__(self, args):
        self.args = args
        texts = []
        self.p_texts, self.g_texts = _split_set(getattr(args, "set", None) or "")
        texts += self.p_texts + self.g_texts
        for name in ("h", "a"):
            if getattr(args, name, None):
                texts.append(getattr(args, name))
        n = max((max_var_index(t) for t in texts), default=0)
        for name in ("b", "d"):
            if getattr(args, name, None):
                n = max(n, len(getattr(args, name).split(",")))
        if getattr(args, "w", None):
            n = max(n, len(_ints(args.w)))
        self.nvars = n

    def set(self) -> SetDescription:
        try:
            p = tuple(parse(t, self.nvars).as_poly() for t in self.p_texts)
        except ValueError as exc:
            if isinstance(exc, GanzError):
                raise
            raise UsageError(f"strict constraints must be polynomials: {exc}") from exc
        g = tuple(parse(t, self.nvars) for t in self.g_texts)
        return SetDescription(p, g, self.nvars)

    def h(self) -> RatFunc:
        if not self.args.h:
            raise UsageError("--h is required")
        return parse(self.args.h, self.nvars)

    def point(self, name: str):
        text = getattr(self.args, name)
        if text is None:
            raise UsageError(f"--{name} is required")
        pt = parse_point(text)
        if len(pt) != self.nvars:
            raise UsageError(f"--{name} has {len(pt)} coordinates, expected {self.nvars}")
        return pt

    def strategy(self) -> SampleStrategy:
        a = self.args
        orders = tuple(_ints(a.eps_orders)) if a.eps_orders is not None else (1, 2, -1)
        if a.grid_step is not None or a.radius is not None:
            step = _rat(a.grid_step or "1/4")
            radius = _rat(a.radius or "2")
            if step <= 0 or radius < 0:
                raise UsageError("--grid-step must be positive and --radius nonnegative")
            return SampleStrategy(Grid(step, radius), orders)
        if a.count < 1:
            raise UsageError("--count must be positive")
        return SampleStrategy(Pseudorandom(a.seed, a.count), orders)

    def valuation(self):
        a = self.args
        if a.w is not None:
            w = _ints(a.w)
            if len(w) != self.nvars:
                raise UsageError(f"--w has {len(w)} weights, expected {self.nvars}")
            return WeightedGauss(tuple(w))
        d = self.point("d")
        if not any(d):
            raise UsageError("--d must be a nonzero direction")
        return NearPoint(self.point("b"), d)


def _fmt_val(v):
    return "inf" if v is INF else repr(v)


# commands ---------------------------------------------------------------------


def cmd_parse(ctx, out):
    h = ctx.h()
    print(f"nvars: {ctx.nvars}", file=out)
    print(f"h: {h}", file=out)
    return EXIT_OK


def _value_at(ctx):
    h = ctx.h()
    if ctx.nvars == 0:
        return h, (), h.constant_value()
    b = ctx.point("b")
    return h, b, h.eval(b)


def cmd_val(ctx, out):
    h, b, value = _value_at(ctx)
    v = value.valuation()
    print(f"h: {h}", file=out)
    if b:
        print(f"b: {format_point(b)}", file=out)
    print(f"value: {value}", file=out)
    print(f"valuation: {'inf' if v is INF else v}", file=out)
    print(f"integral: {'yes' if v is INF or v >= 0 else 'no'}", file=out)
    return EXIT_OK


def cmd_sign(ctx, out):
    h, b, value = _value_at(ctx)
    print(f"h: {h}", file=out)
    if b:
        print(f"b: {format_point(b)}", file=out)
    print(f"value: {value}", file=out)
    print(f"sign: {value.sign():+d}" if value.sign() else "sign: 0", file=out)
    return EXIT_OK


def cmd_near_val(ctx, out):
    h = ctx.h()
    v = ctx.valuation()
    val = v.value(h)
    print(f"h: {h}", file=out)
    print(f"valuation-handle: {_describe_valuation(v)}", file=out)
    print(f"value: {_fmt_val(val)}", file=out)
    if val is not INF and not any(val):
        print(f"residue: {v.residue(h)}", file=out)
    if isinstance(v, NearPoint):
        print(f"line-order sign: {v.sign(h):+d}" if v.sign(h) else "line-order sign: 0", file=out)
    return EXIT_OK


def _describe_valuation(v):
    if isinstance(v, NearPoint):
        return f"NearPoint(b=({format_point(v.b)}), d=({format_point(v.d)}))"
    return f"WeightedGauss(w=({','.join(str(a) for a in v.w)}))"


def _load_cert(path):
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_cone_verify(ctx, out):
    s, cert = _load_cert(ctx.args.file)
    if not isinstance(cert, ConeCert):
        raise UsageError("file does not hold a cone certificate")
    f = cone_value(cert, s)
    print(f"set: {_describe_set(s)}", file=out)
    print(f"cone value: {f}", file=out)
    if ctx.args.b is not None:
        points = [ctx.point("b")] if s.nvars == len(parse_point(ctx.args.b)) else []
        if not points:
            raise UsageError(f"--b must have {s.nvars} coordinates")
    else:
        samples = sample_set(s, ctx.strategy())
        points = samples.points
        if samples.nonemptiness_unknown:
            print("sampling found no point of S (NonemptinessUnknown)", file=out)
            return EXIT_DEGENERATE
    g = generator_value(cert, s)
    checked = skipped = 0
    for b in points:
        try:
            ok = verify_cone_pointwise(cert, s, b)
            gv = g.eval(b).valuation()
        except NotDefinedAt:
            skipped += 1
            continue
        checked += 1
        if not ok or (gv is not INF and gv < 0):
            print(f"FAILED at b=({format_point(b)})", file=out)
            return EXIT_REFUTED
    print(f"points checked: {checked}, undefined: {skipped}", file=out)
    print("result: pass", file=out)
    return EXIT_OK


def _describe_set(s: SetDescription):
    p = "; ".join(str(q) for q in s.p)
    g = "; ".join(str(q) for q in s.g)
    return f"p: {p} | g: {g}" if s.g else f"p: {p}"


def cmd_cone_search(ctx, out):
    s = ctx.set()
    target = ctx.h()
    if not target.is_polynomial():
        raise UsageError("the search target must be a polynomial")
    bound = ctx.args.degree_bound
    if bound is None:
        bound = max(target.num.degree(), 0)
    if bound < target.num.degree():
        raise UsageError(f"--degree-bound {bound} is below the target degree {target.num.degree()}")
    cert = handelman_search(s, target, bound)
    print(f"set: {_describe_set(s)}", file=out)
    print(f"target: {target}", file=out)
    print(f"degree bound: {bound}", file=out)
    if cert is None:
        print("result: Unknown", file=out)
        return EXIT_REFUTED
    if ctx.args.format == "structured":
        out.write(dumps(s, cert))
    else:
        for J, sos in cert.terms:
            parts = ", ".join(str(q) for q in sos.parts)
            print(f"term: subset=[{','.join(str(i) for i in J)}] sos=[{parts}]", file=out)
    print("result: Found", file=out)
    return EXIT_OK


def cmd_radical_verify(ctx, out):
    s, cert = _load_cert(ctx.args.file)
    if not isinstance(cert, RadicalCert):
        raise UsageError("file does not hold a radical certificate")
    print(f"set: {_describe_set(s)}", file=out)
    print(f"h: {cert.h}", file=out)
    print(f"degree: {cert.degree}", file=out)
    try:
        verdict = verify_radical_cert(cert, s)
    except StructuralError as exc:
        print(f"result: StructuralError ({exc})", file=out)
        return EXIT_REFUTED
    if verdict.valid:
        print("result: Valid", file=out)
        return EXIT_OK
    print(f"residual: {verdict.residual}", file=out)
    print("result: Invalid", file=out)
    return EXIT_REFUTED


def cmd_order_pipeline(ctx, out):
    s = ctx.set()
    v = ctx.valuation()
    print(f"set: {_describe_set(s)}", file=out)
    print(f"valuation-handle: {_describe_valuation(v)}", file=out)
    try:
        result = sufficiency_pipeline(v, s)
    except OrderNotFound as exc:
        for i, q, r in exc.residues:
            print(f"residue: p{i + 1} -> {q} -> {r}", file=out)
        print("result: NotFound", file=out)
        return EXIT_DEGENERATE
    except HypothesisViolated as exc:
        print(f"result: HypothesisViolated ({exc})", file=out)
        return EXIT_REFUTED
    for i, val in enumerate(result.values):
        print(f"value: p{i + 1} -> {val!r}", file=out)
    print(f"chosen: {[i + 1 for i in result.basis.chosen]}", file=out)
    for i, q, r in result.residues:
        print(f"residue: p{i + 1} -> {q} -> {r}", file=out)
    print(f"residue order: {result.order.residue_order}", file=out)
    for j, (g, p) in enumerate(result.order.semisection.basis):
        print(f"section: s{g!r} = {p}", file=out)
    for i, sg in enumerate(result.signs):
        print(f"sign: p{i + 1} -> {sg:+d}", file=out)
    print("result: Found", file=out)
    return EXIT_OK


def _report(ctx, out, rep, label):
    a = ctx.args
    strat = ctx.strategy()
    print(f"h: {ctx.h()}", file=out)
    print(f"set: {_describe_set(ctx.set())}", file=out)
    if isinstance(strat.kind, Pseudorandom):
        print(f"strategy: pseudorandom seed={a.seed} count={a.count}", file=out)
    else:
        print(f"strategy: grid step={strat.kind.step} radius={strat.kind.radius}", file=out)
    print(f"eps-orders: {','.join(str(k) for k in strat.epsilon_orders)}", file=out)
    print(f"tested: {rep.tested}, skipped undefined: {rep.skipped_undefined}", file=out)
    if rep.violation:
        w = rep.violation
        print(f"witness: b=({format_point(w.witness)})", file=out)
        print(f"value: {w.value}", file=out)
        print(f"valuation: {w.val[0]}", file=out)
        print(f"result: Violation ({label})", file=out)
        return EXIT_REFUTED
    if rep.nonemptiness_unknown:
        print("result: NonemptinessUnknown", file=out)
        return EXIT_DEGENERATE
    print("result: NoViolationFound (sampling is incomplete; this proves nothing)", file=out)
    return EXIT_OK


def cmd_probe_integrality(ctx, out):
    rep = integrality_probe(ctx.h(), ctx.set(), ctx.strategy())
    return _report(ctx, out, rep, "not integral")


def cmd_probe_bounded(ctx, out):
    if not ctx.args.a:
        raise UsageError("--a is required")
    a = parse(ctx.args.a, ctx.nvars)
    if not a.is_constant():
        raise UsageError("--a must be an element of K")
    a = a.constant_value()
    if not a:
        raise UsageError("--a must be nonzero")
    rep = boundedness_probe(ctx.h(), a, ctx.set(), ctx.strategy())
    print(f"bound: {a} (valuation {a.valuation()})", file=out)
    return _report(ctx, out, rep, "outside the ball")


def cmd_selftest(ctx, out):
    from ganz.acceptance import run_all

    print(f"kernel backend: {kernels.BACKEND}", file=out)
    results = run_all()
    for r in results:
        print(r.line(), file=out)
    ok = all(r.passed for r in results)
    print(f"result: {'pass' if ok else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_REFUTED


COMMANDS = {
    "parse": cmd_parse,
    "val": cmd_val,
    "sign": cmd_sign,
    "near-val": cmd_near_val,
    "cone-verify": cmd_cone_verify,
    "cone-search": cmd_cone_search,
    "radical-verify": cmd_radical_verify,
    "order-pipeline": cmd_order_pipeline,
    "probe-integrality": cmd_probe_integrality,
    "probe-bounded": cmd_probe_bounded,
    "selftest": cmd_selftest,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ganz", description="Exact Ganzstellensatz certificate toolkit over Q(eps).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name in ("cone-verify", "radical-verify"):
            sp.add_argument("file")
        sp.add_argument("--set", default="")
        sp.add_argument("--h")
        sp.add_argument("--a")
        sp.add_argument("--b")
        sp.add_argument("--d")
        sp.add_argument("--w")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--count", type=int, default=200)
        sp.add_argument("--grid-step")
        sp.add_argument("--radius")
        sp.add_argument("--eps-orders")
        sp.add_argument("--degree-bound", type=int)
        sp.add_argument("--format", choices=("text", "structured"), default="text")
    return parser


def run(argv) -> tuple[int, str]:
    """Run one command; return ``(exit code, report text)``."""
    out = io.StringIO()
    try:
        args = build_parser().parse_args(argv)
        ctx = Context(args)
        code = COMMANDS[args.command](ctx, out)
    except UsageError as exc:
        out.write(f"usage error: {exc}\n")
        code = EXIT_USAGE
    except (ParseError, CertificateFormatError, DivisionByZero) as exc:
        out.write(f"input error: {exc}\n")
        code = EXIT_USAGE
    except (DegenerateDirection, NotDefinedAt, BudgetExceeded) as exc:
        kind = "Indeterminate" if isinstance(exc, Indeterminate) else type(exc).__name__
        out.write(f"degenerate input: {kind}: {exc}\n")
        code = EXIT_DEGENERATE
    except GanzError as exc:
        out.write(f"error: {type(exc).__name__}: {exc}\n")
        code = EXIT_REFUTED
    return code, out.getvalue()


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
