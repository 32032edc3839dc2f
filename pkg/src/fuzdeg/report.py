"""Analysis documents and their renderings (JSON, CSV, Markdown, DOT).

All builders return plain dicts with a fixed key order so that serialized
output is byte-identical for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .claims import ClaimRow, claims_for_spec, evaluate, render_value
from .classes import ClassCensus, FuzzyClass, count_classes, enumerate_classes
from .config import RunConfig
from .degree import commutativity_degree
from .groups import parse_group_spec
from .lattice import SubgroupLattice, enumerate_subgroups


def decimal6(fr: Fraction) -> str:
    """Decimal rendering rounded half-even to 6 places, from exact arithmetic."""
    scaled = round(fr * 10**6)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**6)
    return f"{sign}{whole}.{frac:06d}"


def fraction_dict(fr: Fraction) -> dict:
    return {"num": fr.numerator, "den": fr.denominator, "decimal": decimal6(fr)}


def lattice_to_dict(lat: SubgroupLattice) -> dict:
    g = lat.group
    return {
        "group": g.label,
        "order": g.order,
        "elements": list(g.names),
        "subgroups": [
            {
                "id": h.id,
                "name": lat.name(h),
                "order": h.size,
                "members": h.elements(),
                "normal": bool(lat.normal[h.id]),
                "quasinormal": bool(lat.quasinormal[h.id]),
            }
            for h in lat
        ],
        "hasse_edges": [list(e) for e in lat.hasse_edges()],
        "leq": lat.leq.astype(int).tolist(),
        "permutes": lat.permutes.astype(int).tolist(),
        "mutually_permutes": lat.mutually_permutes.astype(int).tolist(),
    }


def census_to_dict(lat: SubgroupLattice, census: ClassCensus) -> dict:
    return {
        "group": lat.group.label,
        "s": census.total,
        "longest_chain": census.longest_chain,
        "per_top": [
            {"subgroup": h.id, "name": lat.name(h), "count": census.per_top[h.id]} for h in lat
        ],
    }


def classes_to_dict(lat: SubgroupLattice, classes: list[FuzzyClass]) -> dict:
    return {
        "group": lat.group.label,
        "s": len(classes),
        "classes": [
            {
                "chain": list(c.chain),
                "names": [lat.name(lat[i]) for i in c.chain],
                "members": [lat[i].elements() for i in c.chain],
                "full_support": c.full_support,
            }
            for c in classes
        ],
    }


def analyze(spec: str, config: RunConfig | None = None) -> dict:
    """Full analysis document for one group spec."""
    config = config or RunConfig(spec=spec)
    g = parse_group_spec(spec, config.max_order)
    lat = enumerate_subgroups(g, jobs=config.jobs)
    census = count_classes(lat)
    classes = enumerate_classes(lat, config.class_cap)
    assert len(classes) == census.total
    deg = commutativity_degree(lat, classes, pair_cap=config.pair_cap, jobs=config.jobs)
    rows = evaluate(claims_for_spec(spec), config.max_order)
    s = deg.s
    return {
        "group": g.label,
        "spec": spec,
        "order": g.order,
        "abelian": g.is_abelian,
        "subgroup_count": len(lat),
        "subgroups": [
            {
                "id": h.id,
                "name": lat.name(h),
                "order": h.size,
                "members": h.elements(),
                "normal": bool(lat.normal[h.id]),
                "quasinormal": bool(lat.quasinormal[h.id]),
            }
            for h in lat
        ],
        "hasse_edges": [list(e) for e in lat.hasse_edges()],
        "s": s,
        "s_star": [
            {"subgroup": h.id, "name": lat.name(h), "count": census.per_top[h.id]} for h in lat
        ],
        "s_star_G": census.per_top[lat.whole.id],
        "longest_chain": census.longest_chain,
        "sd": fraction_dict(deg.sd),
        "permutable_pairs": deg.permutable_pairs,
        "n_count": deg.n_count,
        "qn_count": deg.qn_count,
        "bounds": {
            "n_over_s": fraction_dict(Fraction(deg.n_count, s)),
            "qn_over_s": fraction_dict(Fraction(deg.qn_count, s)),
        },
        "paper_claims": [r.to_dict() for r in rows],
        "discrepancies": [discrepancy(r) for r in rows if not r.match],
    }


def discrepancy(row: ClaimRow) -> dict:
    return {
        "quantity": row.claim.quantity,
        "paper_value": row.claim.printed or render_value(row.claim.paper_value),
        "computed_value": render_value(row.computed_value),
        "paper_location": row.claim.location,
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def analysis_to_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for key in ("group", "spec", "order", "abelian", "subgroup_count", "s", "s_star_G",
                "longest_chain", "permutable_pairs", "n_count", "qn_count"):
        w.writerow([key, render_value(doc[key])])
    sd = doc["sd"]
    w.writerow(["sd", f"{sd['num']}/{sd['den']}"])
    w.writerow(["sd_decimal", sd["decimal"]])
    w.writerow([])
    w.writerow(["subgroup", "name", "order", "normal", "quasinormal", "s_star"])
    for sub, star in zip(doc["subgroups"], doc["s_star"]):
        w.writerow([sub["id"], sub["name"], sub["order"], render_value(sub["normal"]),
                    render_value(sub["quasinormal"]), star["count"]])
    if doc["paper_claims"]:
        w.writerow([])
        w.writerow(["quantity", "paper_value", "computed_value", "match", "paper_location"])
        for c in doc["paper_claims"]:
            w.writerow([c["quantity"], c["paper_value"], c["computed_value"],
                        render_value(c["match"]), c["paper_location"]])
    return buf.getvalue()


def _md_table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines)


def analysis_to_markdown(doc: dict) -> str:
    sd = doc["sd"]
    parts = [
        f"# {doc['group']} (order {doc['order']})",
        "",
        _md_table(
            ["quantity", "value"],
            [
                ["subgroups", doc["subgroup_count"]],
                ["s", doc["s"]],
                ["classes with full support", doc["s_star_G"]],
                ["sd", f"{sd['num']}/{sd['den']} ({sd['decimal']})"],
                ["permutable ordered pairs", doc["permutable_pairs"]],
                ["all-normal classes", doc["n_count"]],
                ["all-quasinormal classes", doc["qn_count"]],
            ],
        ),
        "",
        "## Classes by support",
        "",
        _md_table(
            ["id", "subgroup", "order", "normal", "quasinormal", "classes"],
            [
                [s["id"], s["name"], s["order"], render_value(s["normal"]),
                 render_value(s["quasinormal"]), t["count"]]
                for s, t in zip(doc["subgroups"], doc["s_star"])
            ],
        ),
    ]
    if doc["paper_claims"]:
        parts += ["", "## Published values", "", claims_markdown(doc["paper_claims"])]
    return "\n".join(parts) + "\n"


def claims_markdown(rows: list[dict]) -> str:
    return _md_table(
        ["quantity", "paper", "computed", "match", "where"],
        [[r["quantity"], r["paper_value"], r["computed_value"],
          "yes" if r["match"] else "**no**", r["paper_location"]] for r in rows],
    )


def claims_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["quantity", "paper_value", "computed_value", "match", "paper_location"])
    for r in rows:
        w.writerow([r["quantity"], r["paper_value"], r["computed_value"],
                    render_value(r["match"]), r["paper_location"]])
    return buf.getvalue()


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def lattice_to_dot(lat: SubgroupLattice) -> str:
    lines = [f'digraph "{_dot_escape(lat.group.label)}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for h in lat:
        lines.append(f'  H{h.id} [label="{_dot_escape(lat.name(h))}"];')
    for child, parent in lat.hasse_edges():
        lines.append(f"  H{child} -> H{parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"
