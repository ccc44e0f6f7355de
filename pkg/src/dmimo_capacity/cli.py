"""Command-line front end.

Three subcommands:

  eval     one (alpha2, snr-db, c, cprime) point, one or more schemes
  sweep    cartesian grid over the four axes, CSV or JSON to a file
  figure2  canned 246-row rate-curve dataset (alpha2=0.6, 0..40 dB)
           plus a rendered PNG and a README describing the curves

Capacities are in bit/symbol with "inf" as the literal token for an
unbounded link. SNR is taken in dB on the command line and converted to
linear internally. Exit codes: 0 ok, 2 parameter validation, 3 I/O.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .schemes import LinkBudget, Scheme, applicable_schemes, evaluate_scheme
from .spectrum import ChannelSpec

CSV_HEADER = "alpha2,p_db,c,cprime,scheme,rate,printed_bound,bound_tight,fixed_point"

_SCHEME_ORDER = {s: i for i, s in enumerate(Scheme)}


@dataclass
class SweepRow:
    alpha2: float
    p_db: float
    c: float
    cprime: float
    scheme: str
    rate: float
    printed_bound: Optional[float]
    bound_tight: Optional[bool]
    fixed_point: Optional[float]


def _parse_value(tok: str, axis: str, allow_inf: bool) -> float:
    tok = tok.strip()
    if tok.lower() == "inf":
        if not allow_inf:
            raise ValueError("%s does not accept inf" % axis)
        return math.inf
    try:
        return float(tok)
    except ValueError:
        raise ValueError("bad %s value %r" % (axis, tok)) from None


def _parse_axis(text: str, axis: str, allow_inf: bool = False) -> list:
    """Parse one axis spec: a value, a comma list, or start:step:stop.

    Ranges are inclusive of stop (up to float roundoff) and may not
    contain inf. Returned values are sorted and deduplicated so row
    ordering never depends on how the user phrased the axis.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty %s axis" % axis)
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("%s range must be start:step:stop" % axis)
        start, step, stop = (_parse_value(p, axis, False) for p in parts)
        if step <= 0:
            raise ValueError("%s range step must be > 0" % axis)
        if stop < start:
            raise ValueError("%s range stop < start" % axis)
        n = int(math.floor((stop - start) / step + 1e-9))
        values = [start + k * step for k in range(n + 1)]
    else:
        values = [_parse_value(t, axis, allow_inf) for t in text.split(",")]
    return sorted(set(values))


def _parse_schemes(text: str) -> Optional[list]:
    """None means 'all applicable at each point'; otherwise explicit list."""
    text = text.strip()
    if not text:
        raise ValueError("empty scheme set")
    if text.lower() == "all":
        return None
    out = []
    for tok in text.split(","):
        name = tok.strip().upper().replace("-", "_")
        if not name:
            raise ValueError("empty scheme name in list")
        try:
            out.append(Scheme[name])
        except KeyError:
            raise ValueError(
                "unknown scheme %r (known: %s, or 'all')"
                % (tok.strip(), ",".join(s.name for s in Scheme))
            ) from None
    return out


def _check_applicable(schemes: list, budget: LinkBudget):
    ok = set(applicable_schemes(budget))
    for s in schemes:
        if s not in ok:
            if s in (Scheme.IM, Scheme.QW):
                raise ValueError(
                    "scheme %s requires cprime=inf (got %g)" % (s.name, budget.cprime)
                )
            raise ValueError(
                "scheme %s requires c=inf (got %g)" % (s.name, budget.c)
            )


def _build_rows(alpha2s, p_dbs, cs, cprimes, schemes) -> list:
    rows = []
    for a2 in alpha2s:
        spec = ChannelSpec.from_alpha_squared(a2)
        for p_db in p_dbs:
            p = 10.0 ** (p_db / 10.0)
            for c in cs:
                for cp in cprimes:
                    budget = LinkBudget(p, c, cp)
                    if schemes is None:
                        point_schemes = applicable_schemes(budget)
                    else:
                        _check_applicable(schemes, budget)
                        point_schemes = schemes
                    for s in point_schemes:
                        r = evaluate_scheme(s, spec, budget)
                        rows.append(
                            SweepRow(
                                a2, p_db, c, cp, s.name, r.rate,
                                r.printed_bound, r.bound_tight, r.fixed_point,
                            )
                        )
    rows.sort(
        key=lambda r: (r.alpha2, r.p_db, r.c, r.cprime, _SCHEME_ORDER[Scheme[r.scheme]])
    )
    return rows


def _g12(x: float) -> str:
    return "%.12g" % x


def _cap_str(v: float) -> str:
    return "inf" if math.isinf(v) else _g12(v)


def _csv_lines(rows) -> list:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    _g12(r.alpha2),
                    _g12(r.p_db),
                    _cap_str(r.c),
                    _cap_str(r.cprime),
                    r.scheme,
                    _g12(r.rate),
                    "" if r.printed_bound is None else _g12(r.printed_bound),
                    "" if r.bound_tight is None else ("true" if r.bound_tight else "false"),
                    "" if r.fixed_point is None else _g12(r.fixed_point),
                ]
            )
        )
    return lines


def _row_dict(r: SweepRow) -> dict:
    return {
        "alpha2": r.alpha2,
        "p_db": r.p_db,
        "c": "inf" if math.isinf(r.c) else r.c,
        "cprime": "inf" if math.isinf(r.cprime) else r.cprime,
        "scheme": r.scheme,
        "rate": r.rate,
        "printed_bound": r.printed_bound,
        "bound_tight": r.bound_tight,
        "fixed_point": r.fixed_point,
    }


def rows_to_text(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([_row_dict(r) for r in rows], indent=2) + "\n"
    return "\n".join(_csv_lines(rows)) + "\n"


def rows_from_json(text: str) -> list:
    """Inverse of rows_to_text(fmt='json'); floats round-trip exactly."""
    out = []
    for d in json.loads(text):
        out.append(
            SweepRow(
                d["alpha2"], d["p_db"],
                math.inf if d["c"] == "inf" else d["c"],
                math.inf if d["cprime"] == "inf" else d["cprime"],
                d["scheme"], d["rate"],
                d["printed_bound"], d["bound_tight"], d["fixed_point"],
            )
        )
    return out


def _write_text(path: Optional[str], text: str):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


# figure2: six curves at alpha2=0.6, P = 0..40 dB step 1.
# IM and QW are transmit-side schemes (defined for cprime -> inf), so their
# curves fix c=4; EC and DC are receive-side schemes and fix cprime=4 with
# c -> inf; the upper bound and IM_DC are shown for the doubly limited
# c=cprime=4 case.
_FIG2_ALPHA2 = 0.6
_FIG2_PDB = [float(k) for k in range(41)]
_FIG2_CURVES = [
    (4.0, math.inf, [Scheme.IM, Scheme.QW]),
    (math.inf, 4.0, [Scheme.EC, Scheme.DC]),
    (4.0, 4.0, [Scheme.UB, Scheme.IM_DC]),
]

_FIG2_README = """\
# Rate-curve dataset

`figure2.csv` tabulates achievable-rate curves versus SNR for the symmetric
two-sided-interference channel at alpha^2 = 0.6, SNR swept from 0 to 40 dB
in 1 dB steps (41 points). Six curves, 246 rows:

| scheme | C (transmit-side link) | C' (receive-side link) |
|--------|------------------------|------------------------|
| UB     | 4                      | 4                      |
| IM_DC  | 4                      | 4                      |
| IM     | 4                      | inf                    |
| QW     | 4                      | inf                    |
| EC     | inf                    | 4                      |
| DC     | inf                    | 4                      |

Convention for the one-sided curves: IM and QW are transmit-side schemes
whose rate formulas require unconstrained receive-side links, so their
curves fix C = 4 and let C' -> inf. EC and DC are receive-side schemes and
fix C' = 4 with C -> inf. An alternative convention swaps which side is
left unbounded for these four curves; this dataset uses the pairing above
because it is the only one under which each one-sided rate formula is
defined.

Columns: alpha2,p_db,c,cprime,scheme,rate,printed_bound,bound_tight,fixed_point
(rate in bit/symbol/antenna; printed_bound/bound_tight/fixed_point empty
where a scheme has no closed-form bound or no fixed-point parameter).

`figure2.png` renders the same rows, one line per curve.
"""


def figure2_rows() -> list:
    rows = []
    spec = ChannelSpec.from_alpha_squared(_FIG2_ALPHA2)
    for p_db in _FIG2_PDB:
        p = 10.0 ** (p_db / 10.0)
        for c, cp, schemes in _FIG2_CURVES:
            budget = LinkBudget(p, c, cp)
            for s in schemes:
                r = evaluate_scheme(s, spec, budget)
                rows.append(
                    SweepRow(
                        _FIG2_ALPHA2, p_db, c, cp, s.name, r.rate,
                        r.printed_bound, r.bound_tight, r.fixed_point,
                    )
                )
    rows.sort(
        key=lambda r: (r.alpha2, r.p_db, r.c, r.cprime, _SCHEME_ORDER[Scheme[r.scheme]])
    )
    return rows


def _cmd_eval(args) -> int:
    alpha2s = _parse_axis(args.alpha2, "--alpha2")
    p_dbs = _parse_axis(args.snr_db, "--snr-db")
    cs = _parse_axis(args.c, "--c", allow_inf=True)
    cprimes = _parse_axis(args.cprime, "--cprime", allow_inf=True)
    for name, vals in (
        ("--alpha2", alpha2s), ("--snr-db", p_dbs), ("--c", cs), ("--cprime", cprimes)
    ):
        if len(vals) != 1:
            raise ValueError("eval takes a single %s value, got %d" % (name, len(vals)))
    schemes = _parse_schemes(args.scheme)
    rows = _build_rows(alpha2s, p_dbs, cs, cprimes, schemes)
    _write_text(args.out, rows_to_text(rows, args.format))
    return 0


def _cmd_sweep(args) -> int:
    alpha2s = _parse_axis(args.alpha2, "--alpha2")
    p_dbs = _parse_axis(args.snr_db, "--snr-db")
    cs = _parse_axis(args.c, "--c", allow_inf=True)
    cprimes = _parse_axis(args.cprime, "--cprime", allow_inf=True)
    schemes = _parse_schemes(args.scheme)
    rows = _build_rows(alpha2s, p_dbs, cs, cprimes, schemes)
    _write_text(args.out, rows_to_text(rows, args.format))
    return 0


def _cmd_figure2(args) -> int:
    from .plotting import render_rate_curves

    rows = figure2_rows()
    os.makedirs(args.out, exist_ok=True)
    _write_text(os.path.join(args.out, "figure2.csv"), rows_to_text(rows, "csv"))
    _write_text(os.path.join(args.out, "README.md"), _FIG2_README)
    render_rate_curves(
        rows,
        os.path.join(args.out, "figure2.png"),
        title="alpha^2 = %.1f" % _FIG2_ALPHA2,
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dmimo-capacity",
        description="capacity bounds and achievable rates for distributed "
        "MIMO with capacity-limited oblivious antennas",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_point_args(p, sweep: bool):
        hint = "comma list or start:step:stop" if sweep else "single value"
        p.add_argument("--alpha2", required=True, help="interference gain squared, [0,1] (%s)" % hint)
        p.add_argument("--snr-db", required=True, help="SNR in dB (%s)" % hint)
        p.add_argument("--c", required=True, help="transmit-side link capacity, bit/symbol or inf")
        p.add_argument("--cprime", required=True, help="receive-side link capacity, bit/symbol or inf")
        p.add_argument("--scheme", required=True,
                       help="comma list of %s, or 'all'" % ",".join(s.name for s in Scheme))
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    pe = sub.add_parser("eval", help="evaluate schemes at one parameter point")
    add_point_args(pe, sweep=False)
    pe.add_argument("--out", default=None, help="output file (default: stdout)")
    pe.set_defaults(func=_cmd_eval)

    ps = sub.add_parser("sweep", help="evaluate schemes over a parameter grid")
    add_point_args(ps, sweep=True)
    ps.add_argument("--out", required=True, help="output file")
    ps.set_defaults(func=_cmd_sweep)

    pf = sub.add_parser("figure2", help="emit the canned 246-row rate-curve dataset")
    pf.add_argument("--out", required=True, help="output directory")
    pf.set_defaults(func=_cmd_figure2)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except OSError as e:
        print("i/o error: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
