"""Command-line front end: ``nilorbit <command> [options]``.

Exit status is 0 on success, 1 when a checked identity fails (or an orbit
closure is found non-normal) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .charformula import (
    UnipotentFixtureSet,
    assemble_r_obar,
    diminutive_projection,
    formula_torus_combo,
    ktype_spectrum,
)
from .degeneration import norm_set
from .errors import NilorbitError
from .kmult import (
    DimTable,
    diminutive_table,
    lemma_parameter_tuples,
    normality_report,
    verify_column_lemma,
    verify_main_theorem,
)
from .liecore import Weight, dominant_weights_below, irrep_dimension, weight_multiplicity
from .orbits import (
    Family,
    GroupType,
    Orbit,
    enumerate_orbits,
    generic_part,
    is_generic,
    parity,
    parse_orbit,
    tau,
    to_rows,
)
from .parameters import (
    all_params,
    b_orbit_normal_form,
    distinguished_param,
    gamma_normal_form,
    module_param,
    normal_form,
)

FIXTURE_ENV = "ORBIT_FIXTURES"


class InputError(Exception):
    pass


@dataclass
class RunResult:
    status: int
    text: str = ""
    data: object = None
    latex: str = ""


@dataclass
class RunConfig:
    command: str
    orbit: Orbit | None = None
    format: str = "text"
    fixture_path: str | None = None
    options: dict = field(default_factory=dict)


# -- parsing -------------------------------------------------------------------


def parse_group(text: str) -> GroupType | Family | str:
    """``Sp``, ``O``, ``Oeven``, ``Oodd`` or a sized form such as ``Sp(8)`` / ``O14``."""
    m = re.fullmatch(r"\s*([A-Za-z]+)\s*\(?\s*(\d+)?\s*\)?\s*", text)
    if not m:
        raise InputError(f"cannot parse group {text!r}")
    name, dim = m.group(1), m.group(2)
    if dim is None:
        if name.lower() == "o":
            return "o"
        try:
            return Family.parse(name)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    dim = int(dim)
    if name.lower() == "sp":
        return GroupType.symplectic(dim)
    if name.lower() in ("o", "oeven", "oodd"):
        return GroupType.orthogonal(dim)
    raise InputError(f"unknown group {name!r}")


def parse_columns(text: str) -> list[int]:
    try:
        return [int(t) for t in re.split(r"[,\s]+", text.strip().strip("()[]")) if t]
    except ValueError:
        raise InputError(f"columns must be integers separated by commas: {text!r}") from None


def load_orbit(columns: str | None, group: str | None) -> Orbit:
    if columns is None:
        raise InputError("this command needs --orbit")
    return parse_orbit(parse_group(group or "Sp"), parse_columns(columns))


def load_fixtures(path: str | None) -> UnipotentFixtureSet:
    path = path or os.environ.get(FIXTURE_ENV)
    if path:
        if not os.path.exists(path):
            raise InputError(f"fixture path {path} does not exist")
        return UnipotentFixtureSet.load(path)
    return UnipotentFixtureSet.load()


# -- rendering -----------------------------------------------------------------


def aligned(rows: Sequence[Sequence[str]], header: Sequence[str] | None = None) -> str:
    body = [list(map(str, r)) for r in rows]
    if header:
        body.insert(0, list(header))
    if not body:
        return ""
    widths = [max(len(r[i]) for r in body if i < len(r)) for i in range(max(map(len, body)))]
    lines = []
    for k, r in enumerate(body):
        cells = [c.ljust(widths[i]) if i == 0 else c.rjust(widths[i]) for i, c in enumerate(r)]
        lines.append("  ".join(cells).rstrip())
        if header and k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def latex_table(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    cols = "l|" + "c" * (len(header) - 1)
    out = [f"\\begin{{tabular}}{{{cols}}}", " & ".join(header) + r" \\ \hline"]
    for r in rows:
        out.append(" & ".join(map(str, r)) + r" \\")
    out.append(r"\end{tabular}")
    return "\n".join(out)


def table_header(t: DimTable) -> list[str]:
    return [""] + t.labels()


def table_rows(named: Sequence[tuple[str, DimTable]]) -> list[list[str]]:
    return [[name] + [str(v) for v in t.values] for name, t in named]


def _latex_labels(t: DimTable) -> list[str]:
    if t.group.is_orthogonal:
        return [f"$\\wedge^{{{m}}}\\mathbb{{C}}^{{{t.group.dim}}}$" for m in t.degrees]
    return [f"$V_{{({lab[3:-1]})}}$" for lab in t.labels()]


def render_tables(named: Sequence[tuple[str, DimTable]]) -> tuple[str, str]:
    first = named[0][1]
    text = aligned(table_rows(named), table_header(first))
    latex = latex_table(table_rows(named), [""] + _latex_labels(first))
    return text, latex


# -- commands ------------------------------------------------------------------


def cmd_norm(cfg: RunConfig) -> RunResult:
    ns = norm_set(cfg.orbit)
    if cfg.options.get("dot"):
        return RunResult(0, ns.to_dot(), [m.to_json() for m in ns.members], ns.to_dot())
    rows = [[str(i + 1), str(m)] for i, m in enumerate(ns.members)]
    text = aligned(rows, ["#", f"Norm{cfg.orbit} in {cfg.orbit.group}"])
    latex = "\\{" + ", ".join(str(m) for m in ns.members) + "\\}"
    return RunResult(0, text, [m.to_json() for m in ns.members], latex)


def _module_line(p: Orbit) -> tuple[str, dict, str]:
    m = distinguished_param(p)
    bold = {k for i in m.tau0 for k in (2 * i - 1, 2 * i)}
    marked = ",".join(f"[{v}]" if k in bold else str(v) for k, v in p.indexed())
    text = f"{m.label()}  marked={marked}  P*={m.p_star}  nf={normal_form(m)}"
    latex_cols = "".join(f"{{\\bf {v}}}" if k in bold else str(v) for k, v in p.indexed())
    return text, m.to_json(), f"\\mathcal{{M}}({latex_cols};{m.epsilon})"


def cmd_distinguished(cfg: RunConfig) -> RunResult:
    lines, data, latex = [], [], []
    for p in norm_set(cfg.orbit).members:
        t, d, lx = _module_line(p)
        lines.append(t)
        data.append(d)
        latex.append(lx)
    return RunResult(0, "\n".join(lines), data, ",\\ ".join(latex))


def cmd_dimtable(cfg: RunConfig) -> RunResult:
    o = cfg.orbit
    eps = cfg.options.get("epsilon")
    which = cfg.options.get("which", "gamma")
    named = []
    if eps:
        m = module_param(o, eps)
        named.append((m.label(), diminutive_table(normal_form(m))))
    elif which == "all":
        for m in all_params(o):
            named.append((m.label(), diminutive_table(normal_form(m))))
    elif which == "orbit":
        named.append((f"R_O{o}", diminutive_table(b_orbit_normal_form(o))))
    else:
        named.append((f"Gamma{o}", diminutive_table(gamma_normal_form(o))))
    text, latex = render_tables(named)
    data = [{"name": n, **t.to_json()} for n, t in named]
    return RunResult(0, text, data, latex)


def _lemma_tuple_text(cols) -> str:
    return ",".join(str(c) for c in cols)


def cmd_lemma(cfg: RunConfig) -> RunResult:
    kind = cfg.options["kind"]
    sign = cfg.options.get("sign", "+")
    if cfg.options.get("sweep"):
        bound = cfg.options.get("max_entry") or (8 if kind == 5 else 10)
        count = 0
        for cols in lemma_parameter_tuples(kind, bound, sign):
            r = verify_column_lemma(kind, cols, sign)
            count += 1
            if not r.equal:
                text = (f"FAIL at ({_lemma_tuple_text(r.columns)}): lhs {r.lhs} != rhs {r.rhs_sum}")
                return RunResult(1, text, r.to_json(), text)
        text = f"OK: {count} parameter tuples for the {kind}-column identity ({sign} variant)"
        return RunResult(0, text, {"checked": count, "equal": True}, text)
    cols = cfg.options.get("columns")
    if cols is None:
        raise InputError("lemma-check needs --columns or --sweep")
    vals = [c.strip() for c in cols.split(",") if c.strip()]
    r = verify_column_lemma(kind, vals, sign)
    named = [("lhs", r.lhs), ("rhs first", diminutive_table(r.rhs_forms[0])),
             ("rhs second", diminutive_table(r.rhs_forms[1])), ("rhs sum", r.rhs_sum)]
    tab, latex = render_tables(named)
    verdict = "EQUAL" if r.equal else "NOT EQUAL"
    text = (f"{kind}-column identity at ({_lemma_tuple_text(r.columns)}), variant {sign}\n"
            f"degenerated: ({_lemma_tuple_text(r.degenerated)})\n{tab}\n"
            f"{verdict}; inferred sigma {r.inferred_sigma}, printed rule {r.printed_sigma}")
    return RunResult(0 if r.equal else 1, text, r.to_json(), latex)


def _sweep_family(group: str | None) -> list[Family]:
    if group is None:
        return [Family.SP, Family.O_EVEN, Family.O_ODD]
    g = parse_group(group)
    if isinstance(g, GroupType):
        return [g.family]
    if g == "o":
        return [Family.O_EVEN, Family.O_ODD]
    return [g]


def cmd_verify_main(cfg: RunConfig) -> RunResult:
    if cfg.options.get("sweep"):
        bound = cfg.options.get("max_sum") or 14
        count = 0
        for fam in _sweep_family(cfg.options.get("group")):
            for o in enumerate_orbits(fam, bound, even_only=True):
                if not is_generic(o):
                    continue
                r = verify_main_theorem(o)
                count += 1
                if not r.equal:
                    text = f"FAIL at {o} in {o.group}: gamma {r.gamma} != sum {r.sum}"
                    return RunResult(1, text, r.to_json(), text)
        text = f"OK: {count} even generic orbits with column sum <= {bound}"
        return RunResult(0, text, {"checked": count, "equal": True}, text)
    o = cfg.orbit
    r = verify_main_theorem(o, allow_unproven=cfg.options.get("allow_unproven", False))
    named = [(f"M({p.label()};{distinguished_param(p).epsilon})", t) for p, t in r.per_member.items()]
    named += [("sum", r.sum), ("Gamma", r.gamma)]
    tab, latex = render_tables(named)
    verdict = "EQUAL" if r.equal else "NOT EQUAL"
    note = " (unproven case)" if r.unproven else ""
    text = f"{tab}\n{verdict}{note}: {len(r.per_member)} members of Norm{o}"
    return RunResult(0 if r.equal else 1, text, r.to_json(), latex)


def cmd_normality(cfg: RunConfig) -> RunResult:
    if cfg.options.get("sweep"):
        bound = cfg.options.get("max_sum") or 12
        rows, data = [], []
        for fam in _sweep_family(cfg.options.get("group") or "Sp"):
            for o in enumerate_orbits(fam, bound):
                r = normality_report(o)
                rows.append([str(o), str(o.group), "yes" if r.equal else "no", r.message()])
                data.append(r.to_json())
        text = aligned(rows, ["orbit", "group", "tables agree", "report"])
        return RunResult(0, text, data, text)
    r = normality_report(cfg.orbit)
    tab, latex = render_tables([("R(closure)", r.r_obar), ("R(orbit)", r.r_o)])
    return RunResult(0 if r.equal else 1, f"{tab}\n{r.message()}", r.to_json(), latex)


def _combo_text(combo) -> tuple[str, list]:
    rows = []
    for w, c in combo.items():
        rows.append([w.label(), str(c)])
    return aligned(rows, ["weight", "coeff"]), combo.to_json()


def cmd_charformula(cfg: RunConfig) -> RunResult:
    fixtures = load_fixtures(cfg.fixture_path)
    f = assemble_r_obar(cfg.orbit, fixtures)
    combo = formula_torus_combo(f)
    lines = [f"R(closure of {cfg.orbit}) in {cfg.orbit.group}: {len(f.summands)} summands, "
             f"infinitesimal character {f.inf_char}"]
    lines += [f"  {s}" for s in f.summands]
    tab, data = _combo_text(combo)
    lines.append(tab)
    latex = " ".join(
        f"{'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)}\\mathrm{{Ind}}_T^K(\\mathbb{{C}}_{{{w.label('')}}})"
        for w, c in combo.items()
    )
    return RunResult(0, "\n".join(lines), {"formula": f.to_json(), "combo": data}, latex)


def cmd_ktypes(cfg: RunConfig) -> RunResult:
    fixtures = load_fixtures(cfg.fixture_path)
    combo = formula_torus_combo(assemble_r_obar(cfg.orbit, fixtures))
    bound = cfg.options.get("max_entry") or 3
    spec = ktype_spectrum(combo, bound)
    rows = [[w.label(), str(m)] for w, m in sorted(spec.items(), key=lambda kv: kv[0].doubled) if m]
    proj = diminutive_projection(combo)
    expected = diminutive_table(gamma_normal_form(cfg.orbit)).values
    status = 0 if proj == expected else 1
    text = (aligned(rows, ["K-type", "mult"]) +
            f"\ndiminutive projection {proj}, generating-function table {expected}")
    data = {"ktypes": [{"weight": w.label(), "mult": m} for w, m in spec.items() if m],
            "diminutive": list(proj), "expected": list(expected)}
    return RunResult(status, text, data, latex_table(rows, ["$\\mu$", "mult"]))


def cmd_weightmult(cfg: RunConfig) -> RunResult:
    fam = cfg.options.get("family", "C").upper()
    mu_text = cfg.options.get("mu")
    if not mu_text:
        raise InputError("weightmult needs --mu")
    try:
        mu = Weight.parse(mu_text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    n = mu.rank
    dim = irrep_dimension(fam, n, mu)
    lam_text = cfg.options.get("lam")
    if lam_text:
        lam = Weight.parse(lam_text)
        m = weight_multiplicity(fam, n, mu, lam)
        text = f"m_{mu}({lam}) = {m}  (type {fam}{n}, dim {dim})"
        return RunResult(0, text, {"family": fam, "mu": mu.label(), "lam": lam.label(),
                                   "mult": m, "dim": dim}, text)
    rows = [[w.label(), str(weight_multiplicity(fam, n, mu, w))] for w in dominant_weights_below(fam, mu)]
    text = f"type {fam}{n}, highest weight {mu}, dim {dim}\n" + aligned(rows, ["dominant weight", "mult"])
    data = {"family": fam, "mu": mu.label(), "dim": dim,
            "weights": [{"weight": r[0], "mult": int(r[1])} for r in rows]}
    return RunResult(0, text, data, latex_table(rows, ["weight", "mult"]))


def cmd_analyze(cfg: RunConfig) -> RunResult:
    o = cfg.orbit
    gp = generic_part(o)
    ns = norm_set(o)
    info = {
        "orbit": o.to_json(),
        "group": str(o.group),
        "rows": to_rows(o),
        "parity": parity(o).value,
        "generic": is_generic(o),
        "tau": list(tau(o)),
        "generic_part": {"removed_pairs": list(gp.removed_pairs),
                         "orbit": gp.generic_orbit.to_json()},
        "norm": [m.to_json() for m in ns.members],
    }
    gamma = diminutive_table(gamma_normal_form(o))
    info["gamma_normal_form"] = str(gamma_normal_form(o))
    info["gamma_table"] = list(gamma.values)
    lines = [
        f"orbit {o} in {o.group}; rows {to_rows(o)}; parity {parity(o).value}",
        f"generic: {is_generic(o)}; tau = {list(tau(o))}; "
        f"generic part {gp.generic_orbit} after removing pairs {list(gp.removed_pairs)}",
        f"Norm has {len(ns)} members: " + ", ".join(str(m) for m in ns.members),
        f"Gamma normal form {gamma_normal_form(o)}",
    ]
    if is_generic(o) and parity(o).value == "Even":
        lines.append("distinguished modules:")
        lines += ["  " + _module_line(p)[0] for p in ns.members]
        info["distinguished"] = [distinguished_param(p).to_json() for p in ns.members]
    nr = normality_report(o)
    info["normality"] = nr.to_json()
    tab, latex = render_tables([("R(closure)", nr.r_obar), ("R(orbit)", nr.r_o)])
    lines += [tab, nr.message()]
    return RunResult(0, "\n".join(lines), info, latex)


HANDLERS: dict[str, Callable[[RunConfig], RunResult]] = {
    "analyze": cmd_analyze,
    "norm": cmd_norm,
    "distinguished": cmd_distinguished,
    "dimtable": cmd_dimtable,
    "lemma-check": cmd_lemma,
    "verify-main": cmd_verify_main,
    "normality": cmd_normality,
    "charformula": cmd_charformula,
    "ktypes": cmd_ktypes,
    "weightmult": cmd_weightmult,
}

NEEDS_ORBIT = {"analyze", "norm", "distinguished", "dimtable", "charformula", "ktypes"}


def run(cfg: RunConfig) -> RunResult:
    if cfg.command not in HANDLERS:
        raise InputError(f"unknown command {cfg.command!r}")
    return HANDLERS[cfg.command](cfg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilorbit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, orbit=True):
        if orbit:
            sp.add_argument("--orbit", help="column sizes, e.g. 8,6,6,4,4,2,2,0")
        sp.add_argument("--group", help="Sp, O, Oeven, Oodd, optionally sized: Sp(8), O14")
        sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
        return sp

    common(sub.add_parser("analyze", help="summary of one orbit"))
    sp = common(sub.add_parser("norm", help="members of Norm(O)"))
    sp.add_argument("--dot", action="store_true", help="emit the degeneration graph in DOT")
    common(sub.add_parser("distinguished", help="distinguished module of each member of Norm(O)"))
    sp = common(sub.add_parser("dimtable", help="diminutive multiplicity table"))
    sp.add_argument("--epsilon", help="table of M(O; epsilon) instead of Gamma(O)")
    sp.add_argument("--which", choices=("gamma", "orbit", "all"), default="gamma")
    sp = common(sub.add_parser("lemma-check", help="check a 3/4/5-column identity"), orbit=False)
    sp.add_argument("--kind", type=int, choices=(3, 4, 5), required=True)
    sp.add_argument("--columns", help="e.g. inf,6,6,2 or 6,2,2,2")
    sp.add_argument("--sign", choices=("+", "-"), default="+")
    sp.add_argument("--sweep", action="store_true")
    sp.add_argument("--max-entry", type=int)
    sp = common(sub.add_parser("verify-main", help="Gamma(O) against the distinguished sum"))
    sp.add_argument("--sweep", action="store_true")
    sp.add_argument("--max-sum", type=int)
    sp.add_argument("--allow-unproven", action="store_true")
    sp = common(sub.add_parser("normality", help="compare functions on the closure and the orbit"))
    sp.add_argument("--sweep", action="store_true")
    sp.add_argument("--max-sum", type=int)
    for name in ("charformula", "ktypes"):
        sp = common(sub.add_parser(name, help="torus combo of R(O closure)" if name == "charformula"
                                   else "K-type multiplicities of R(O closure)"))
        sp.add_argument("--fixtures", help=f"fixture file or directory (default ${FIXTURE_ENV})")
        if name == "ktypes":
            sp.add_argument("--max-entry", type=int, default=3)
    sp = sub.add_parser("weightmult", help="weight multiplicities of one irreducible")
    sp.add_argument("--family", choices=("A", "B", "C", "D", "a", "b", "c", "d"), default="C")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--lam")
    sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    opts = {k: v for k, v in vars(ns).items()
            if k not in ("command", "orbit", "format", "fixtures")}
    cfg = RunConfig(ns.command, None, ns.format, getattr(ns, "fixtures", None), opts)
    sweeping = opts.get("sweep")
    if ns.command in NEEDS_ORBIT or (ns.command in ("verify-main", "normality") and not sweeping):
        cfg.orbit = load_orbit(getattr(ns, "orbit", None), getattr(ns, "group", None))
    return cfg


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        result = run(cfg)
    except (InputError, NilorbitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.format == "json":
        out = json.dumps(result.data, indent=2, ensure_ascii=False, default=_json_default)
    elif cfg.format == "latex":
        out = result.latex
    else:
        out = result.text
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.stdout.write(out + "\n")
    return result.status


if __name__ == "__main__":
    sys.exit(main())
