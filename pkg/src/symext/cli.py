"""Command-line front end.

Subcommands: ``decompose`` (multiplicity tables), ``genfun`` (series or exact
rational generating functions), ``closedform`` (shortcut evaluations),
``verify`` (every identity check attached to a group).  Groups come from the
builtin catalog, from a JSON group-spec file, or from permutation generators.
Output is deterministic: the same invocation produces byte-identical text.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from . import catalog
from .catalog import PermModel, get_perm_model, parse_group_selector
from .closedforms import (
    CentralCharSpec,
    InvalidCentralCharError,
    InvalidSubgroupError,
    NormalSubgroupSpec,
    burnside_regular_forms,
    central_char_spec,
    central_forms,
    expand_product_form,
    one_dim_forms,
    quotient_pullback,
    subgroup_spec,
)
from .exactnum import Cyclotomic, NotRationalError
from .genfun import (
    EXT,
    SYM,
    genfun_rational,
    genfun_series,
    genfun_series_table,
    multiplicity_table,
)
from .groupdata import (
    CharacterTable,
    ClassData,
    ClassFunction,
    complete_power_maps,
    decompose,
    inner_product,
    regular_character,
    validate_table,
)
from .lambdaops import LambdaSequence, char_poly, is_periodic, product_form
from .permgroup import Permutation, class_data, enumerate_group, standard_characters

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


class InputError(ValueError):
    """Bad selector, file or flag; reported with exit code 2."""


# ---------------------------------------------------------------------------
# deterministic output documents


@dataclass
class OutputDocument:
    kind: str  # table | series | ratfun | closedform | report
    payload: dict

    def to_machine(self) -> str:
        return json.dumps(
            {"kind": self.kind, "payload": self.payload},
            sort_keys=True,
            separators=(",", ":"),
        )

    @staticmethod
    def parse_machine(text: str) -> "OutputDocument":
        raw = json.loads(text)
        return OutputDocument(kind=raw["kind"], payload=raw["payload"])

    def rows_for_tabulation(self) -> tuple[list[str], list[list[str]]]:
        p = self.payload
        if self.kind == "table":
            header = ["degree"] + list(p["columns"])
            rows = [[str(i)] + [str(v) for v in row] for i, row in enumerate(p["rows"])]
            return header, rows
        if self.kind == "series":
            header = ["degree", "coefficient"]
            return header, [[str(i), str(c)] for i, c in enumerate(p["coefficients"])]
        if self.kind == "ratfun":
            return ["field", "value"], [
                ["display", p["display"]],
                ["numerator", " ".join(p["numerator"])],
                ["denominator", " ".join(p["denominator"])],
            ]
        if self.kind == "closedform":
            return ["item", "value"], [[r["item"], r["value"]] for r in p["lines"]]
        header = ["check", "status", "detail"]
        return header, [
            [r["check"], "ok" if r["ok"] else "FAIL", r.get("detail", "")]
            for r in p["checks"]
        ]

    def to_plain(self) -> str:
        header, rows = self.rows_for_tabulation()
        widths = [
            max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
            for i in range(len(header))
        ]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        for r in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        header, rows = self.rows_for_tabulation()

        def esc(cell: str) -> str:
            if any(ch in cell for ch in ",\"\n"):
                return '"' + cell.replace('"', '""') + '"'
            return cell

        lines = [",".join(esc(c) for c in header)]
        lines += [",".join(esc(c) for c in r) for r in rows]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "plain":
            return self.to_plain()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "machine":
            return self.to_machine() + "\n"
        raise InputError(f"unknown format {fmt!r}")


def _frac_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# group resolution


@dataclass
class GroupContext:
    name: str
    table: CharacterTable | None = None
    model: PermModel | None = None
    regular: ClassFunction | None = None
    natural: ClassFunction | None = None
    subgroups: dict[str, NormalSubgroupSpec] = field(default_factory=dict)
    central: dict[str, CentralCharSpec] = field(default_factory=dict)
    transfers: dict = field(default_factory=dict)

    @property
    def classes(self) -> ClassData:
        if self.table is not None:
            return self.table.classes
        return self.model.data

    def character(self, selector: str) -> ClassFunction:
        if selector == "regular":
            return regular_character(self.classes)
        if selector == "natural":
            if self.natural is None:
                raise InputError("no permutation model, so no natural character")
            return self.natural
        if self.table is None:
            raise InputError(
                "character selection beyond regular/natural needs a character table"
            )
        try:
            return self.table.character(selector)
        except KeyError:
            raise InputError(
                f"unknown character {selector!r}; available: "
                + ", ".join(self.table.labels)
            ) from None


def _builtin_context(family: str, param: int | None) -> GroupContext:
    table = catalog.get_group(family, param)
    ctx = GroupContext(name=table.name or family, table=table)
    cd = table.classes
    ctx.regular = regular_character(cd)
    try:
        model = get_perm_model(family, param)
    except Exception:
        model = None
    if model is not None:
        ctx.model = model
        _, natural = standard_characters(model.group, model.data)
        # transport the natural character onto the builtin class order
        ctx.natural = ClassFunction(
            cd, [natural.values[model.matching[c]] for c in range(cd.class_count)]
        )
    for name, idx in catalog.named_subgroups(family, param).items():
        ctx.subgroups[name] = subgroup_spec(cd, idx)
    ctx.central = catalog.central_characters(family, param)
    ctx.transfers = catalog.quotient_transfers(family, param)
    return ctx


def _parse_cyclo(value, root_order: int, where: str) -> Cyclotomic:
    if not isinstance(value, list) or not all(
        isinstance(t, list) and len(t) == 3 for t in value
    ):
        raise InputError(f"{where}: a value is a list of [exponent, num, den] triples")
    try:
        return Cyclotomic.from_terms(
            root_order, [(int(e), Fraction(int(n), int(d))) for e, n, d in value]
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: {exc}") from exc


def load_group_spec(path: str) -> GroupContext:
    """Load and fully validate a JSON group-spec file; failures are fatal."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read group spec: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc
    if raw.get("format_version") != 1:
        raise InputError(f"{path}: format_version must be 1")
    try:
        name = str(raw["name"])
        order = int(raw["order"])
        root_order = int(raw["root_order"])
        classes = raw["classes"]
        irreducibles = raw["irreducibles"]
    except KeyError as exc:
        raise InputError(f"{path}: missing required field {exc}") from exc
    names, sizes, rep_orders, inverse = [], [], [], []
    prime_maps: dict[int, list[int]] = {}
    for i, cls in enumerate(classes):
        where = f"{path}: classes[{i}]"
        try:
            names.append(str(cls["name"]))
            sizes.append(int(cls["size"]))
            rep_orders.append(int(cls["rep_order"]))
            inverse.append(int(cls["inverse"]))
        except KeyError as exc:
            raise InputError(f"{where}: missing field {exc}") from exc
        for p_raw, image in cls.get("prime_powers", {}).items():
            prime_maps.setdefault(int(p_raw), [0] * len(classes))[i] = int(image)
    exponent = lcm(*rep_orders)
    if root_order % exponent:
        raise InputError(
            f"{path}: root_order {root_order} is not a multiple of the exponent {exponent}"
        )
    value_rows = []
    labels = []
    for j, irr in enumerate(irreducibles):
        where = f"{path}: irreducibles[{j}]"
        labels.append(str(irr.get("name", f"chi{j+1}")))
        vals = irr.get("values")
        if not isinstance(vals, list) or len(vals) != len(classes):
            raise InputError(f"{where}: need one value per class")
        value_rows.append(
            [_parse_cyclo(v, root_order, f"{where}.values[{c}]") for c, v in enumerate(vals)]
        )
    try:
        maps = complete_power_maps(exponent, prime_maps, value_rows)
    except (KeyError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    cd = ClassData(order, exponent, names, sizes, rep_orders, inverse, maps)
    table = CharacterTable(cd, [ClassFunction(cd, row) for row in value_rows], labels, name)
    problems = validate_table(table)
    if problems:
        raise InputError(
            f"{path}: table validation failed:\n  " + "\n  ".join(problems)
        )
    ctx = GroupContext(name=name, table=table, regular=regular_character(cd))
    gens = raw.get("generators")
    if gens:
        perms = [Permutation.from_cycles(g) for g in gens]
        degree = max(p.degree for p in perms)
        perms = [
            Permutation(list(p.images) + list(range(p.degree, degree))) for p in perms
        ]
        group = enumerate_group(perms)
        derived = class_data(group)
        matching = catalog.match_class_data(cd, derived)
        if matching is None:
            raise InputError(f"{path}: generators do not match the declared classes")
        ctx.model = PermModel(group, derived, matching)
        _, natural = standard_characters(group, derived)
        ctx.natural = ClassFunction(
            cd, [natural.values[matching[c]] for c in range(cd.class_count)]
        )
    for sub_name, idx in raw.get("normal_subgroups", {}).items():
        try:
            ctx.subgroups[sub_name] = subgroup_spec(cd, tuple(int(i) for i in idx))
        except InvalidSubgroupError as exc:
            raise InputError(f"{path}: normal_subgroups[{sub_name!r}]: {exc}") from exc
    for cname, cc in raw.get("central_chars", {}).items():
        where = f"{path}: central_chars[{cname!r}]"
        sub = cc.get("subgroup")
        if isinstance(sub, str):
            if sub not in ctx.subgroups:
                raise InputError(f"{where}: unknown subgroup {sub!r}")
            spec = ctx.subgroups[sub]
        else:
            try:
                spec = subgroup_spec(cd, tuple(int(i) for i in sub))
            except InvalidSubgroupError as exc:
                raise InputError(f"{where}: {exc}") from exc
        zeta = {
            int(c): Cyclotomic.root_of_unity(root_order, int(e))
            for c, e in cc.get("zeta", {}).items()
        }
        try:
            ctx.central[cname] = central_char_spec(cd, spec, zeta, int(cc.get("multiplier", 1)))
        except InvalidCentralCharError as exc:
            raise InputError(f"{where}: {exc}") from exc
    return ctx


def cyclo_terms(value: Cyclotomic, root_order: int) -> list[list[int]]:
    """Serialize a value as [exponent, numerator, denominator] triples."""
    lifted = value.lift(root_order)
    return [
        [i, c.numerator, c.denominator] for i, c in enumerate(lifted.coeffs) if c != 0
    ]


def dump_group_spec(table: CharacterTable, generators: list[str] | None = None) -> dict:
    """The JSON document for a character table, in group-spec format."""
    cd = table.classes
    root = cd.exponent
    classes = []
    for c in range(cd.class_count):
        classes.append(
            {
                "name": cd.names[c],
                "size": cd.sizes[c],
                "rep_order": cd.rep_orders[c],
                "inverse": cd.inverse_class[c],
                "prime_powers": {
                    str(p): m[c]
                    for p, m in sorted(cd.prime_power_maps.items())
                    if root % p == 0
                },
            }
        )
    irreducibles = [
        {
            "name": lbl,
            "values": [cyclo_terms(v, root) for v in chi.values],
        }
        for lbl, chi in zip(table.labels, table.irreducibles)
    ]
    doc = {
        "format_version": 1,
        "name": table.name or "group",
        "order": cd.group_order,
        "root_order": root,
        "classes": classes,
        "irreducibles": irreducibles,
    }
    if generators:
        doc["generators"] = generators
    return doc


def _enumerate_generators(text: str):
    perms = [Permutation.from_cycles(g) for g in text.split(";") if g.strip()]
    if not perms:
        raise InputError("no generators given")
    degree = max(p.degree for p in perms)
    perms = [Permutation(list(p.images) + list(range(p.degree, degree))) for p in perms]
    return enumerate_group(perms)


def resolve_group(args) -> GroupContext:
    selector = getattr(args, "group", None)
    generators = getattr(args, "generators", None)
    if generators and not selector:
        group = _enumerate_generators(generators)
        data = class_data(group)
        ctx = GroupContext(name=f"<generated order {len(group)}>")
        ctx.model = PermModel(group, data, tuple(range(data.class_count)))
        ctx.regular, ctx.natural = standard_characters(group, data)
        return ctx
    if not selector:
        raise InputError("a group is required (--group or --generators)")
    if os.path.exists(selector) or selector.endswith(".json"):
        ctx = load_group_spec(selector)
    else:
        family, param = parse_group_selector(selector)
        try:
            ctx = _builtin_context(family, param)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if generators:
        # a table plus explicit generators: attach the model to the table
        group = _enumerate_generators(generators)
        derived = class_data(group)
        matching = catalog.match_class_data(ctx.table.classes, derived)
        if matching is None:
            raise InputError("generators do not realize the selected group")
        ctx.model = PermModel(group, derived, matching)
        _, natural = standard_characters(group, derived)
        ctx.natural = ClassFunction(
            ctx.table.classes,
            [natural.values[matching[c]] for c in range(ctx.table.classes.class_count)],
        )
    return ctx


# ---------------------------------------------------------------------------
# subcommands


def _op_of(args) -> str:
    if args.op not in (SYM, EXT):
        raise InputError("--op must be sym or ext")
    return args.op


def cmd_decompose(args) -> tuple[OutputDocument, int]:
    ctx = resolve_group(args)
    if ctx.table is None:
        raise InputError("decompose needs a character table")
    if args.degree < 0:
        raise InputError("--degree must be nonnegative")
    chi = ctx.character(args.char)
    mt = multiplicity_table(chi, ctx.table, _op_of(args), args.degree)
    doc = OutputDocument(
        "table",
        {
            "group": ctx.name,
            "character": args.char,
            "op": args.op,
            "columns": list(ctx.table.labels),
            "rows": [list(row) for row in mt.rows],
        },
    )
    return doc, EXIT_OK


def _resolve_irr(ctx: GroupContext, selector: str) -> int:
    labels = ctx.table.labels
    if selector in labels:
        return labels.index(selector)
    try:
        j = int(selector)
    except ValueError:
        raise InputError(
            f"unknown irreducible {selector!r}; available: " + ", ".join(labels)
        ) from None
    if not 1 <= j <= len(labels):
        raise InputError(f"irreducible index must be in 1..{len(labels)}")
    return j - 1


def cmd_genfun(args) -> tuple[OutputDocument, int]:
    ctx = resolve_group(args)
    if ctx.table is None:
        raise InputError("genfun needs a character table")
    chi = ctx.character(args.char)
    j = _resolve_irr(ctx, args.irr)
    op = _op_of(args)
    if args.series is not None:
        coeffs = genfun_series(
            chi, ctx.table, j, op, args.series, cross_check=args.check_consistency
        )
        doc = OutputDocument(
            "series",
            {
                "group": ctx.name,
                "character": args.char,
                "irreducible": ctx.table.labels[j],
                "op": op,
                "coefficients": [_frac_str(c) for c in coeffs],
            },
        )
        return doc, EXIT_OK
    rf = genfun_rational(chi, ctx.table, j, op)
    if args.check_consistency:
        want = genfun_series(chi, ctx.table, j, op, 25, cross_check=True)
        if rf.series(25) != want:
            raise AssertionError("rational form disagrees with the series routes")
    doc = OutputDocument(
        "ratfun",
        {
            "group": ctx.name,
            "character": args.char,
            "irreducible": ctx.table.labels[j],
            "op": op,
            "display": str(rf),
            "numerator": [_frac_str(c) for c in rf.num],
            "denominator": [_frac_str(c) for c in rf.den],
        },
    )
    return doc, EXIT_OK


def _mult_str(table: CharacterTable, coeffs) -> str:
    parts = []
    for lbl, q in zip(table.labels, coeffs):
        if q:
            q = Fraction(q)
            parts.append(lbl if q == 1 else f"{_frac_str(q)}*{lbl}")
    return " + ".join(parts) if parts else "0"


def _poly_str(coeffs) -> str:
    from .genfun import format_poly

    return format_poly(list(coeffs))


def cmd_closedform(args) -> tuple[OutputDocument, int]:
    ctx = resolve_group(args)
    if ctx.table is None:
        raise InputError("closedform needs a character table")
    table = ctx.table
    cd = table.classes
    sel = args.spec.split(":")
    lines: list[dict] = []
    kind = sel[0]
    if kind == "regular":
        m = int(sel[1]) if len(sel) > 1 else 1
        spec = ctx.subgroups.get("trivial") or subgroup_spec(cd, (0,))
        forms = burnside_regular_forms(cd, spec, m)
        _burnside_lines(lines, table, forms, args.degree)
    elif kind == "quotient":
        if len(sel) < 2 or sel[1] not in ctx.subgroups:
            raise InputError(
                "quotient:<subgroup>[:m] with subgroup one of: "
                + ", ".join(sorted(ctx.subgroups))
            )
        m = int(sel[2]) if len(sel) > 2 else 1
        forms = burnside_regular_forms(cd, ctx.subgroups[sel[1]], m)
        _burnside_lines(lines, table, forms, args.degree)
    elif kind == "central":
        if len(sel) < 2 or sel[1] not in ctx.central:
            raise InputError(
                "central:<name> with name one of: " + ", ".join(sorted(ctx.central))
            )
        forms = central_forms(cd, ctx.central[sel[1]])
        _central_lines(lines, table, forms, args.degree)
    elif kind == "onedim":
        if len(sel) < 2:
            raise InputError("onedim:<character label>")
        chi = ctx.character(sel[1])
        forms = one_dim_forms(chi, table)
        lines.append({"item": "rule", "value": "powers of a one-dimensional character"})
        lines.append({"item": "multiplicative order", "value": str(forms.order)})
        lines.append(
            {"item": "lambda_t", "value": f"{table.labels[0]} + {sel[1]}*t"}
        )
        for j, lbl in enumerate(table.labels):
            rf = forms.genfun(j)
            if rf.num:
                lines.append({"item": f"<{lbl}, S_t>", "value": str(rf)})
    else:
        raise InputError(
            "spec selector must be regular[:m], quotient:<name>[:m], "
            "central:<name> or onedim:<label>"
        )
    doc = OutputDocument(
        "closedform", {"group": ctx.name, "spec": args.spec, "lines": lines}
    )
    return doc, EXIT_OK


def _closed_route_decompositions(lines, table, degree, lambda_polys, sym_series):
    # assemble S^n / exterior decompositions from the per-class closed forms
    cd = table.classes
    for n in range(1, degree + 1):
        ext_fn = ClassFunction(
            cd,
            [
                poly[n] if n < len(poly) else 0
                for poly in lambda_polys
            ],
        )
        sym_fn = ClassFunction(cd, [series[n] for series in sym_series])
        lines.append(
            {
                "item": f"ext^{n} decomposition",
                "value": _mult_str(table, decompose(ext_fn, table)),
            }
        )
        lines.append(
            {
                "item": f"S^{n} decomposition",
                "value": _mult_str(table, decompose(sym_fn, table)),
            }
        )


def _burnside_lines(lines, table, forms, degree):
    cd = table.classes
    lines.append({"item": "rule", "value": "divisor product form for a periodic character"})
    chi = forms.character()
    lines.append(
        {"item": "character", "value": _mult_str(table, decompose(chi, table))}
    )
    for c in range(cd.class_count):
        h = forms.coset_orders[c]
        e = forms.m * forms.spec.quotient_order // h
        base = "1+t" if h == 1 else (f"1+t^{h}" if h % 2 else f"1-t^{h}")
        lines.append(
            {
                "item": f"lambda_t at {cd.names[c]}",
                "value": f"({base})^{e} = " + _poly_str(forms.lambda_poly(c)),
            }
        )
    _closed_route_decompositions(
        lines,
        table,
        degree,
        [forms.lambda_poly(c) for c in range(cd.class_count)],
        [forms.sym_series(c, degree) for c in range(cd.class_count)],
    )
    qo = forms.spec.quotient_order
    for n in range(1, degree + 1):
        if gcd(n, qo) == 1:
            for op, tag in ((SYM, "S"), (EXT, "ext")):
                short = forms.shortcut(n, op)
                lines.append(
                    {
                        "item": f"coprime-degree rule {tag}^{n}",
                        "value": _mult_str(table, decompose(short, table)),
                    }
                )
    return lines


def _central_lines(lines, table, forms, degree):
    cd = table.classes
    lines.append(
        {"item": "rule", "value": "central one-dimensional character extended by zero"}
    )
    polys = []
    all_classes_ok = True
    for c in range(cd.class_count):
        try:
            poly = forms.lambda_poly(c)
        except Exception as exc:
            lines.append({"item": f"lambda_t at {cd.names[c]}", "value": f"({exc})"})
            all_classes_ok = False
            continue
        polys.append(poly)
        lines.append(
            {"item": f"lambda_t at {cd.names[c]}", "value": _cyc_poly_str(poly)}
        )
    if all_classes_ok:
        _closed_route_decompositions(
            lines,
            table,
            degree,
            polys,
            [forms.sym_series(c, degree) for c in range(cd.class_count)],
        )
    qo = forms.spec.subgroup.quotient_order
    for n in range(1, degree + 1):
        if gcd(n, qo) == 1:
            for op, tag in ((SYM, "S"), (EXT, "ext")):
                short = forms.shortcut(n, op)
                lines.append(
                    {
                        "item": f"coprime-degree rule {tag}^{n}",
                        "value": _mult_str(table, decompose(short, table)),
                    }
                )
    return lines


def _cyc_poly_str(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        txt = repr(c)
        if i == 0:
            parts.append(txt)
        else:
            t = "t" if i == 1 else f"t^{i}"
            parts.append(t if txt == "1" else f"({txt})*{t}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# verify


def _verify_checks(ctx: GroupContext, degree: int) -> list[dict]:
    checks: list[dict] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"check": name, "ok": bool(ok), "detail": detail})

    cd = ctx.classes
    if ctx.table is not None:
        problems = validate_table(ctx.table)
        record("table-identities", not problems, "; ".join(problems[:4]))
    else:
        problems = cd.structural_problems()
        record("class-data-structure", not problems, "; ".join(problems[:4]))
    # power maps compose
    ok = True
    for n in (2, 3, 5, 6):
        for m in (2, 3, 5):
            lhs = cd.power_map(n * m)
            via = cd.power_map(n)
            rhs = tuple(cd.power_map(m)[via[c]] for c in range(cd.class_count))
            if lhs != rhs:
                ok = False
    record("power-map-composition", ok)
    reg = regular_character(cd)
    record("regular-character-periodic", is_periodic(reg))
    # product form reconstructs the per-class polynomials of the regular character
    pf = product_form(reg)
    ok = True
    for c in range(cd.class_count):
        poly = char_poly(reg, c)
        recon = expand_product_form(pf, c, len(poly) - 1)
        if len(recon) < len(poly):
            recon += [Cyclotomic.from_rational(0)] * (len(poly) - len(recon))
        if any(poly[i] != recon[i] for i in range(len(poly))):
            ok = False
    record("regular-product-form", ok)
    if ctx.natural is not None:
        record("natural-character-periodic", is_periodic(ctx.natural))
    if ctx.table is None:
        return checks
    table = ctx.table
    qs = decompose(reg, table)
    record(
        "regular-degree-multiplicities",
        list(qs) == [chi.values[0].to_rational() for chi in table.irreducibles],
    )
    # dual-route generating-function coefficients
    ok = True
    detail = ""
    for j, chi in enumerate(table.irreducibles):
        try:
            genfun_series_table(chi, table, SYM, degree, cross_check=True)
        except Exception as exc:
            ok = False
            detail = f"{table.labels[j]}: {exc}"
            break
    record("dual-route-coefficients", ok, detail)
    # one-dimensional shortcut agreement
    ok = True
    for j, chi in enumerate(table.irreducibles):
        if chi.values[0] != 1:
            continue
        forms = one_dim_forms(chi, table)
        seq = LambdaSequence.compute(chi, 12, expect_character=True)
        for i in range(13):
            if seq.syms[i] != forms.sym_power(i):
                ok = False
        for jj in range(table.classes.class_count):
            rf = genfun_rational(chi, table, jj, SYM)
            if rf != forms.genfun(jj):
                ok = False
    record("one-dimensional-forms", ok)
    for name, spec in sorted(ctx.subgroups.items()):
        forms = burnside_regular_forms(cd, spec, 1)
        chi = forms.character()
        seq = LambdaSequence.compute(chi, min(degree, 2 * spec.quotient_order), True)
        ok = True
        for c in range(cd.class_count):
            poly = char_poly(chi, c)
            closed = forms.lambda_poly(c)
            if len(poly) != len(closed) or any(
                poly[i] != closed[i] for i in range(len(poly))
            ):
                ok = False
        for n in range(1, spec.quotient_order + 6):
            if gcd(n, spec.quotient_order) != 1:
                continue
            if n <= seq.degree_bound:
                if seq.syms[n] != forms.shortcut(n, SYM):
                    ok = False
                if seq.lambdas[n] != forms.shortcut(n, EXT):
                    ok = False
        record(f"quotient-permutation-forms:{name}", ok)
    for name, spec in sorted(ctx.central.items()):
        forms = central_forms(cd, spec)
        chi = forms.character()
        bound = min(degree, 2 * spec.multiplier)
        seq = LambdaSequence.compute(chi, bound, expect_character=False)
        ok = True
        for c in range(cd.class_count):
            poly = char_poly(chi, c)
            closed = forms.lambda_poly(c)
            if len(poly) != len(closed) or any(
                poly[i] != closed[i] for i in range(len(poly))
            ):
                ok = False
        for n in range(1, spec.subgroup.quotient_order + 2):
            if gcd(n, spec.subgroup.quotient_order) != 1 or n > bound:
                continue
            if seq.syms[n] != forms.shortcut(n, SYM):
                ok = False
            if seq.lambdas[n] != forms.shortcut(n, EXT):
                ok = False
        record(f"central-forms:{name}", ok)
    for name, (qtable, qmap) in sorted(ctx.transfers.items()):
        try:
            qt = quotient_pullback(ctx.table, qtable, qmap)
        except Exception as exc:
            record(f"quotient-transfer:{name}", False, str(exc))
            continue
        ok = True
        pulled = qt.pulled_irreducibles()
        for chi_q in qtable.irreducibles:
            seq_q = LambdaSequence.compute(chi_q, degree, True)
            seq_g = LambdaSequence.compute(qt.pull(chi_q), degree, True)
            for i in range(degree + 1):
                for j, phi in enumerate(pulled):
                    lhs = inner_product(phi, seq_g.syms[i])
                    rhs = inner_product(qtable.irreducibles[j], seq_q.syms[i])
                    if lhs != rhs:
                        ok = False
        record(f"quotient-transfer:{name}", ok)
    if ctx.model is not None:
        derived = ctx.model.data
        match = ctx.model.matching
        ok = all(
            derived.sizes[match[c]] == cd.sizes[c]
            and derived.rep_orders[match[c]] == cd.rep_orders[c]
            for c in range(cd.class_count)
        )
        record("permutation-model-classes", ok)
    return checks


def cmd_verify(args) -> tuple[OutputDocument, int]:
    ctx = resolve_group(args)
    checks = _verify_checks(ctx, args.degree)
    doc = OutputDocument("report", {"group": ctx.name, "checks": checks})
    code = EXIT_OK if all(c["ok"] for c in checks) else EXIT_VERIFY
    return doc, code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symext",
        description="Exact symmetric/exterior power decompositions of group characters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_char=False):
        p.add_argument("--group", help="builtin selector (S3, D2n:8, Hp:5) or spec file")
        p.add_argument(
            "--generators",
            help="semicolon-separated cycle strings, e.g. '(0 1);(0 1 2)'",
        )
        if with_char:
            p.add_argument(
                "--char",
                required=True,
                help="character label, or 'regular' / 'natural'",
            )
        p.add_argument(
            "--format", default="plain", choices=["plain", "csv", "machine"]
        )

    p = sub.add_parser("decompose", help="multiplicity table of S^i or exterior powers")
    common(p, with_char=True)
    p.add_argument("--op", default=SYM, choices=[SYM, EXT])
    p.add_argument("--degree", type=int, default=10)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("genfun", help="multiplicity generating function")
    common(p, with_char=True)
    p.add_argument("--irr", required=True, help="irreducible label or 1-based index")
    p.add_argument("--op", default=SYM, choices=[SYM, EXT])
    p.add_argument("--series", type=int, default=None, metavar="N",
                   help="print coefficients 0..N instead of the rational form")
    p.add_argument("--check-consistency", action="store_true",
                   help="recompute through the multiplicity table and compare")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("closedform", help="shortcut forms for special characters")
    common(p)
    p.add_argument("--spec", required=True,
                   help="regular[:m] | quotient:<subgroup>[:m] | central:<name> | onedim:<label>")
    p.add_argument("--degree", type=int, default=10)
    p.set_defaults(func=cmd_closedform)

    p = sub.add_parser("verify", help="run every identity check attached to the group")
    common(p)
    p.add_argument("--degree", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotRationalError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(doc.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
