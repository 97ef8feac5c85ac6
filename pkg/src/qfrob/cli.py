"""Command-line front end.

Every subcommand assembles a plain dict, renders it as JSON (sorted keys, so
reruns are byte-identical) or as indented text, and maps outcomes to exit
codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import InputError, QFrobError
from .frobdual import dual_datum
from .qparam import QuantumParameter, from_orders, l_i, l_table, parse_exponent_spec
from .rootdata import RootDatum, make_root_datum, parse_type
from .smalldata import cardinalities, delta_l, recipe_listing
from .steinberg import is_restricted, rho_l, steinberg_decompose

VERIFY_KINDS = ("pbw", "braid", "serre", "appendix", "normality", "skew")
MODULE_KINDS = ("verma", "simple", "steinberg", "ext")
DEFAULT_PBW_HEIGHT = {"A1": 6, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "A1xA1": 6}


@dataclass
class RunConfig:
    command: str
    type_string: str = "A1"
    lattice: str = "sc"
    orders: list[int] | None = None
    q_exponents: str | None = None
    weight: list[int] | None = None
    height: int | None = None
    output_format: str = "json"
    seed: int = 0
    out: str | None = None
    selection: str | None = None
    sweep_types: list[str] = field(default_factory=list)
    sweep_orders: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "RunConfig":
        return cls(**data)


# ---------------------------------------------------------------------------
# parsing


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None
    if not vals:
        raise InputError(f"{what} is empty")
    return vals


def parse_order_range(text: str) -> list[int]:
    """``1..12``, ``1-12`` or ``2,4,6``."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.|-)\s*(\d+)\s*", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo < 1 or hi < lo:
            raise InputError(f"bad order range {text!r}")
        return list(range(lo, hi + 1))
    vals = parse_int_list(text, "orders")
    if any(v < 1 for v in vals):
        raise InputError("orders must be positive")
    return vals


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    if text.strip().lower().startswith(("root", "q:")):
        raise InputError("weights are entered in fundamental-weight coordinates only")
    lam = tuple(parse_int_list(text, "weight"))
    if len(lam) != rank:
        raise InputError(f"weight needs {rank} coordinates, got {len(lam)}")
    return lam


def load_lattice(spec: str):
    if spec in ("sc", "adj"):
        return spec
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"lattice must be sc, adj or a file of generator rows; {spec!r} is none of these")
    text = path.read_text()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        rows = [[int(x) for x in line.replace(",", " ").split()] for line in text.splitlines() if line.strip()]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("lattice file must hold a list of integer rows")
    try:
        return [[int(c) for c in r] for r in rows]
    except (TypeError, ValueError):
        raise InputError("lattice file must hold a list of integer rows") from None


def build_datum(cfg: RunConfig) -> tuple[RootDatum, QuantumParameter]:
    cart = parse_type(cfg.type_string)
    datum = make_root_datum(cart, load_lattice(cfg.lattice))
    if cfg.q_exponents is not None:
        if cfg.orders is not None:
            raise InputError("give either an order or explicit exponents, not both")
        p = parse_exponent_spec(cart, cfg.q_exponents)
    elif cfg.orders is not None:
        p = from_orders(cart, cfg.orders if len(cfg.orders) > 1 else cfg.orders[0])
    else:
        raise InputError("an --order, --orders or --q-exponents value is required")
    return datum, p


# ---------------------------------------------------------------------------
# report assembly


def lattice_layer(datum: RootDatum, p: QuantumParameter) -> dict:
    cart = datum.cartan
    dual = dual_datum(datum, p)
    card = cardinalities(datum, p)
    # short roots first, then by height: the layout used in the l-table examples
    table = sorted(l_table(cart, p), key=lambda rl: (rl[0].d, rl[0].height, rl[0].q_coords))
    out = {
        "type": cart.name,
        "parameter": p.to_json(),
        "l_table": [{"root": r.label(), "height": r.height, "length": r.length_class, "l": l} for r, l in table],
        "l_values": [l for _, l in table],
        "l": [l_i(cart, p, c) for c in range(len(cart.components))],
        "delta_l": [r.label() for r in delta_l(cart, p).roots],
        "dual": {
            "dual_type": dual.dual_type_name,
            "dual_cartan": [list(r) for r in dual.dual_cartan],
            "epsilon": list(dual.epsilon),
            "index_x_xstar": dual.index_x_xstar,
        },
        "cardinalities": card.to_json(),
    }
    try:
        out["rho_l"] = list(rho_l(datum, p))
    except QFrobError as exc:
        out["rho_l"] = None
        out["rho_l_note"] = str(exc)
    return out


def cmd_report(cfg: RunConfig) -> dict:
    datum, p = build_datum(cfg)
    rep = lattice_layer(datum, p)
    rep["lattice"] = [list(r) for r in datum.x_lattice.basis]
    rep["recipes"] = recipe_listing(datum, p)
    if cfg.weight is not None:
        rep["decompositions"] = [decompose(datum, p, cfg.weight)]
    return rep


def decompose(datum: RootDatum, p: QuantumParameter, weight: Sequence[int]) -> dict:
    lam = parse_weight(",".join(map(str, weight)), datum.rank)
    split = steinberg_decompose(datum, p, lam)
    return {
        "weight": list(lam),
        "lambda0": list(split.lambda0),
        "lambda1": list(split.lambda1),
        "rho_l": list(rho_l(datum, p)),
        "is_restricted": is_restricted(datum, p, lam),
    }


def cmd_decompose(cfg: RunConfig) -> dict:
    if cfg.weight is None:
        raise InputError("decompose needs --weight")
    datum, p = build_datum(cfg)
    return decompose(datum, p, cfg.weight)


def cmd_dual(cfg: RunConfig) -> dict:
    datum, p = build_datum(cfg)
    full = dual_datum(datum, p).to_json()
    keys = ("dual_type", "dual_cartan", "epsilon", "index_x_xstar", "x_star_basis", "lq_basis")
    out = {k: full[k] for k in keys}
    out["parameter"] = p.to_json()
    return out


def cmd_dims(cfg: RunConfig) -> dict:
    datum, p = build_datum(cfg)
    out = cardinalities(datum, p).to_json()
    out["delta_l"] = [r.label() for r in delta_l(datum.cartan, p).roots]
    out["recipes"] = recipe_listing(datum, p)
    out["parameter"] = p.to_json()
    return out


def cmd_verify(cfg: RunConfig) -> list[dict]:
    from . import qsymbolic as qs

    kind = cfg.selection
    cart = parse_type(cfg.type_string)
    if kind == "pbw":
        h = cfg.height or DEFAULT_PBW_HEIGHT.get(cart.name, 6)
        return qs.verify_pbw(cart, h)
    if kind == "serre":
        return qs.verify_serre(cart, cfg.height or DEFAULT_PBW_HEIGHT.get(cart.name, 6))
    if kind == "braid":
        return qs.verify_braid(cart, cfg.height)
    order = _single_order(cfg)
    if kind == "appendix":
        return qs.verify_appendix_braid(cart.name, order)
    if kind == "normality":
        return qs.verify_normality_commutators(cart.name, order)
    if kind == "skew":
        return qs.verify_skew_primitive(cart.name, order, cfg.height or 12)
    raise InputError(f"unknown verification {kind!r}")


def _single_order(cfg: RunConfig) -> int:
    if cfg.orders is None or len(cfg.orders) != 1:
        raise InputError("this verification needs a single --order")
    return cfg.orders[0]


def _context(cfg: RunConfig):
    from .repkernel import SmallContext

    datum, p = build_datum(cfg)
    return SmallContext(datum, p)


def cmd_modules(cfg: RunConfig) -> dict:
    from .qsymbolic.verify import verdict
    from .repkernel import baby_verma, ext1, linked_simple_labels, simple, steinberg_module, steinberg_suite
    from .repkernel.modules import is_simple
    from .repkernel.suites import module_report

    ctx = _context(cfg)
    kind = cfg.selection
    if kind == "steinberg":
        return module_report(steinberg_module(ctx), steinberg_suite(ctx, cfg.seed))
    if cfg.weight is None:
        raise InputError(f"modules {kind} needs --weight")
    lam = parse_weight(",".join(map(str, cfg.weight)), ctx.rank)
    if kind == "verma":
        M = baby_verma(ctx, lam)
        ok = M.dim == ctx.root_product
        return module_report(M, [verdict(f"{ctx.tag}:dim M{list(lam)} = prod l_gamma", ok, None, {"dim": M.dim})])
    L = simple(ctx, lam)
    if kind == "simple":
        return module_report(L, [verdict(f"{ctx.tag}:L{list(lam)} simple", is_simple(L), None, None)])
    if kind == "ext":
        table = []
        for mu in linked_simple_labels(L):
            other = simple(ctx, mu)
            right, left = ext1(L, other), ext1(other, L)
            table.append({"mu": list(mu), "ext1_L_to_mu": right.to_json(), "ext1_mu_to_L": left.to_json()})
        rep = module_report(L, [])
        rep["ext1"] = table
        return rep
    raise InputError(f"unknown module kind {kind!r}")


def sweep_records(types: Sequence[str], orders: Sequence[int], lattice: str = "sc") -> list[dict]:
    records = []
    for t in types:
        cart = parse_type(t)
        datum = make_root_datum(cart, load_lattice(lattice))
        for n in orders:
            rec = lattice_layer(datum, from_orders(cart, n))
            rec["order"] = n
            records.append(rec)
    return records


def cmd_sweep(cfg: RunConfig) -> dict:
    records = sweep_records(cfg.sweep_types, cfg.sweep_orders, cfg.lattice)
    return {"records": records, "count": len(records)}


# ---------------------------------------------------------------------------
# rendering

SCHEMA_KINDS = {
    "report": "report",
    "decompose": "decomposition",
    "dual": "dual",
    "dims": "dims",
    "verify": "verdicts",
    "modules": "modules",
    "sweep": "sweep",
}


def output_schema(command: str) -> dict:
    """JSON schema for the output of ``command``, from the published schema file."""
    full = json.loads((Path(__file__).parent / "schema.json").read_text())
    return {"$schema": full["$schema"], "$defs": full["$defs"], "$ref": f"#/$defs/{SCHEMA_KINDS[command]}"}



def render_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(data))
    return "\n".join(lines) + "\n"


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def _failed(data) -> bool:
    if isinstance(data, dict):
        if data.get("status") == "FAIL":
            return True
        return any(_failed(v) for v in data.values())
    if isinstance(data, list):
        return any(_failed(v) for v in data)
    return False


# ---------------------------------------------------------------------------
# argument handling


def _common(p: argparse.ArgumentParser, need_order: bool = True) -> None:
    p.add_argument("--type", dest="type_string", default="A1", help="Cartan type, e.g. A2, B2, A1xA1")
    p.add_argument("--lattice", default="sc", help="sc, adj, or a file with generator rows of X")
    if need_order:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--order", type=str, help="root of unity order for every component")
        g.add_argument("--orders", type=str, help="per-component orders n1,n2,...")
        p.add_argument("--q-exponents", dest="q_exponents", help="explicit parameter e1,e2,...@N")
    p.add_argument("--weight", help="weight in fundamental-weight coordinates c1,c2,...")
    p.add_argument("--height", type=int, help="truncation height override")
    p.add_argument("--format", dest="output_format", choices=("json", "text"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qfrob", description="Quantum groups at roots of unity: data and checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("report", "lattice-layer report"),
        ("decompose", "Steinberg decomposition of a dominant weight"),
        ("dual", "quantum Frobenius dual datum"),
        ("dims", "dimensions of the small algebras and generator recipes"),
    ):
        _common(sub.add_parser(name, help=helptext))
    v = sub.add_parser("verify", help="symbolic identity checks")
    v.add_argument("selection", choices=VERIFY_KINDS)
    _common(v)
    m = sub.add_parser("modules", help="module-category computations")
    m.add_argument("selection", choices=MODULE_KINDS)
    _common(m)
    s = sub.add_parser("sweep", help="lattice-layer table over types and orders")
    _common(s, need_order=False)
    s.set_defaults(type_string="A1,A2,B2,G2")
    s.add_argument("--orders", default="1..12", help="order range 1..12 or list")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=ns.command,
        type_string=ns.type_string,
        lattice=ns.lattice,
        height=ns.height,
        output_format=ns.output_format,
        seed=ns.seed,
        out=ns.out,
        selection=getattr(ns, "selection", None),
    )
    if ns.height is not None and ns.height < 1:
        raise InputError("--height must be positive")
    if ns.command == "sweep":
        cfg.sweep_types = [t.strip() for t in ns.type_string.split(",") if t.strip()]
        cfg.sweep_orders = parse_order_range(ns.orders)
        return cfg
    if ns.order is not None:
        cfg.orders = parse_int_list(ns.order, "order")
        if len(cfg.orders) != 1:
            raise InputError("--order takes one integer; use --orders for a list")
    elif ns.orders is not None:
        cfg.orders = parse_int_list(ns.orders, "orders")
    cfg.q_exponents = ns.q_exponents
    if ns.weight is not None:
        cfg.weight = parse_int_list(ns.weight, "weight")
    return cfg


COMMANDS = {
    "report": cmd_report,
    "decompose": cmd_decompose,
    "dual": cmd_dual,
    "dims": cmd_dims,
    "verify": cmd_verify,
    "modules": cmd_modules,
    "sweep": cmd_sweep,
}


def run(cfg: RunConfig) -> tuple[object, int]:
    data = COMMANDS[cfg.command](cfg)
    return data, (1 if _failed(data) else 0)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        data, code = run(cfg)
    except (InputError, ValueError, KeyError, OSError) as exc:
        print(f"qfrob: input error: {exc}", file=sys.stderr)
        return 2
    except QFrobError as exc:
        print(f"qfrob: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = render_text(data) if cfg.output_format == "text" else render_json(data)
    if cfg.out:
        try:
            Path(cfg.out).write_text(text)
        except OSError as exc:
            print(f"qfrob: cannot write {cfg.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
