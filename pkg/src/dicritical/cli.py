"""Command-line front end.

Exit codes: 0 all checks consistent, 1 inconsistency found, 2 usage or parse
error, 3 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import constructions as C
from .bounds import audit_bounds, ceil_fraction, family_sizes, lower_bound_o3, lower_bound_ok, o3_upper
from .digraph import Digraph, dumps, read_digraph, role_comments
from .errors import DicriticalError, InstanceTooLarge
from .potential import classify_by_potential, min_potential_subset, rho
from .solver import (
    DEFAULT_NODE_BUDGET,
    dicolour,
    enumerate_labelled_tournaments,
    is_acyclic,
    is_k_dicolourable,
    is_k_dicritical,
)
from .structure import (
    check_gallai_blocks,
    min_degree_violations,
    digon_forest_check,
    single_simple_neighbour_vertices,
)

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


# -- audit report -------------------------------------------------------------


@dataclass
class AuditReport:
    input: str
    n: int
    m: int
    k: int
    oriented: bool
    chi: int
    dicritical: bool
    failure_arc: list[int] | None = None
    isolated_vertices: list[int] = field(default_factory=list)
    rho: int = 0
    potential_class: str | None = None
    potential_consistent: bool | None = None
    gallai_blocks: list[list] = field(default_factory=list)
    gallai_ok: bool | None = None
    min_degree_violations: list[int] = field(default_factory=list)
    digon_forest_ok: bool | None = None
    single_simple_neighbour: list[int] = field(default_factory=list)
    bounds: list[dict] = field(default_factory=list)
    consistent: bool = False
    timing: dict[str, float] = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> str:
        data = asdict(self)
        if not timing:
            data.pop("timing")
        return json.dumps(data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> AuditReport:
        return cls(**json.loads(text))

    def to_text(self, timing: bool = True) -> str:
        def fmt(value) -> str:
            if value is None:
                return "-"
            if isinstance(value, bool):
                return "true" if value else "false"
            if isinstance(value, list):
                return " ".join(fmt(v) for v in value) if value else "-"
            return str(value)

        lines = [
            f"input {self.input}",
            f"n {self.n}",
            f"m {self.m}",
            f"k {self.k}",
            f"oriented {fmt(self.oriented)}",
            f"chi {self.chi}",
            f"dicritical {fmt(self.dicritical)}",
            f"failure_arc {fmt(self.failure_arc)}",
            f"isolated_vertices {fmt(self.isolated_vertices)}",
            f"rho {self.rho}",
            f"potential_class {fmt(self.potential_class)}",
            f"potential_consistent {fmt(self.potential_consistent)}",
            f"gallai_ok {fmt(self.gallai_ok)}",
        ]
        lines += [f"gallai_block {','.join(map(str, b))} {c}" for b, c in self.gallai_blocks]
        lines += [
            f"min_degree_violations {fmt(self.min_degree_violations)}",
            f"digon_forest_ok {fmt(self.digon_forest_ok)}",
            f"single_simple_neighbour {fmt(self.single_simple_neighbour)}",
        ]
        for b in self.bounds:
            status = ("ok" if b["holds"] else "violated") if b["applicable"] else "n/a"
            note = f" ({b['note']})" if b["note"] else ""
            lines.append(f"bound {b['name']} {b['value']} {b['relation']} {b['bound']} {status}{note}")
        lines.append(f"consistent {fmt(self.consistent)}")
        if timing:
            lines.append("# timing")
            lines += [f"time_{key} {value:.6f}" for key, value in sorted(self.timing.items())]
        return "\n".join(lines) + "\n"


def audit(D: Digraph, k: int = 3, label: str = "-", workers: int = 1,
          budget: int = DEFAULT_NODE_BUDGET) -> AuditReport:
    """Full pipeline: dicriticality, potential class, structural checks, bounds.

    The structural checks only apply to inputs verified k-dicritical;
    a failed dicriticality check is itself an inconsistency.
    """
    timing: dict[str, float] = {}
    t0 = time.perf_counter()
    crit = is_k_dicritical(D, k, budget=budget, workers=workers)
    timing["dicritical"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    rep = AuditReport(
        input=label, n=D.n, m=D.m, k=k, oriented=D.is_oriented(), chi=crit.chi,
        dicritical=crit.is_dicritical,
        failure_arc=list(crit.failure_arc) if crit.failure_arc else None,
        isolated_vertices=list(crit.isolated_vertices),
        rho=rho(D).rho,
    )
    checks = [crit.is_dicritical]
    if crit.is_dicritical:
        if k == 3:
            verdict = classify_by_potential(D)
            rep.potential_class = verdict.cls.value
            rep.potential_consistent = verdict.consistent
            rep.digon_forest_ok = digon_forest_check(D)
            checks += [verdict.consistent, rep.digon_forest_ok]
        gallai = check_gallai_blocks(D, k)
        rep.gallai_blocks = [[list(b), c] for b, c in gallai.blocks]
        rep.gallai_ok = gallai.ok
        rep.min_degree_violations = min_degree_violations(D, k)
        rep.single_simple_neighbour = single_simple_neighbour_vertices(D)
        checks += [gallai.ok, not rep.min_degree_violations, not rep.single_simple_neighbour]
        bounds = audit_bounds(D, k)
        rep.bounds = [
            {"name": c.name, "value": c.value, "bound": str(c.bound), "relation": c.relation,
             "holds": c.holds, "applicable": c.applicable, "note": c.note}
            for c in bounds.comparisons
        ]
        checks.append(bounds.consistent)
    timing["checks"] = time.perf_counter() - t0
    rep.consistent = all(checks)
    rep.timing = timing
    return rep


# -- helpers ------------------------------------------------------------------


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return _ints(text)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


# -- gen ------------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DicriticalError(f"family {args.family!r} needs --{' --'.join(missing)}")


def _gen(args) -> C.LabelledDigraph:
    fam = args.family

    def plain(D: Digraph) -> C.LabelledDigraph:
        return C.LabelledDigraph(D, {})

    if fam in ("dicycle", "bicycle", "bipath", "bicomplete", "transitive", "o3"):
        _need(args, "n")
        simple: dict[str, Callable[[int], Digraph]] = {
            "dicycle": C.directed_cycle, "bicycle": C.bidirected_cycle, "bipath": C.bidirected_path,
            "bicomplete": C.bidirected_complete, "transitive": C.transitive_tournament,
        }
        return C.o3(args.n) if fam == "o3" else plain(simple[fam](args.n))
    if fam == "knob":
        _need(args, "height")
        return C.knob(args.height)
    if fam == "knobprime":
        return C.knob_prime()
    if fam == "dknob":
        _need(args, "input")
        return C.generalized_knob(read_digraph(args.input))
    if fam == "odd3wheel":
        _need(args, "spikes")
        if len(args.spikes) != 3:
            raise DicriticalError("--spikes takes three lengths")
        return C.odd_3_wheel(*args.spikes)
    if fam == "gfamily":
        _need(args, "i", "k")
        return plain(C.g_family(args.i, args.k))
    if fam == "trianglejoin":
        _need(args, "c1", "c2")
        return plain(C.triangle_join(C.directed_cycle(args.c1), C.directed_cycle(args.c2)))
    if fam == "paley11":
        return plain(C.paley_11())
    if fam == "circulant":
        _need(args, "n", "residues")
        return plain(C.circulant_tournament(args.n, args.residues))
    if fam == "kplus1":
        _need(args, "k")
        return plain(C.order_k_plus_1_example(args.k))
    if fam == "gadget":
        _need(args, "kind", "lengths")
        return C.gadget(C.GadgetSpec(args.kind, tuple(args.lengths)))
    raise DicriticalError(f"unknown family {fam!r}")


GEN_FAMILIES = ["dicycle", "bicycle", "bipath", "bicomplete", "transitive", "knob", "knobprime",
                "dknob", "o3", "odd3wheel", "gfamily", "trianglejoin", "paley11", "circulant",
                "kplus1", "gadget"]


def cmd_gen(args) -> int:
    L = _gen(args)
    comments = [f"family {args.family}"] + role_comments(L.roles)
    _emit(dumps(L.digraph, comments), args.output)
    return EXIT_OK


def cmd_chi(args) -> int:
    D = read_digraph(args.file)
    if args.max_k is not None:
        for k in range(0 if D.n == 0 else 1, args.max_k + 1):
            col = is_k_dicolourable(D, k, budget=args.budget) if k else None
            if k == 0 or col is not None:
                break
        else:
            print(f"chi >{args.max_k}")
            return EXIT_LIMIT
        chi = k
        assignment = col.assignment if col else ()
    else:
        chi, col = dicolour(D, budget=args.budget)
        assignment = col.assignment
    print(f"chi {chi}")
    print("colouring " + " ".join(map(str, assignment)) if assignment else "colouring -")
    return EXIT_OK


def cmd_dicritical(args) -> int:
    D = read_digraph(args.file)
    rep = is_k_dicritical(D, args.k, budget=args.budget, workers=args.threads)
    if args.json:
        payload = {
            "k": rep.k, "chi": rep.chi, "dicritical": rep.is_dicritical,
            "failure_arc": list(rep.failure_arc) if rep.failure_arc else None,
            "isolated_vertices": list(rep.isolated_vertices),
            "witnesses": {f"{u} {v}": list(c.assignment) for (u, v), c in rep.witness_colourings.items()},
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"k {rep.k}")
        print(f"chi {rep.chi}")
        print(f"dicritical {'true' if rep.is_dicritical else 'false'}")
        if rep.failure_arc:
            print(f"failure_arc {rep.failure_arc[0]} {rep.failure_arc[1]}")
        if rep.isolated_vertices:
            print("isolated_vertices " + " ".join(map(str, rep.isolated_vertices)))
        if args.witnesses:
            for (u, v), c in rep.witness_colourings.items():
                print(f"witness {u} {v} " + " ".join(map(str, c.assignment)))
    return EXIT_OK if rep.is_dicritical else EXIT_INCONSISTENT


def cmd_audit(args) -> int:
    D = read_digraph(args.file)
    rep = audit(D, args.k, label=os.path.basename(args.file), workers=args.threads, budget=args.budget)
    text = rep.to_json(not args.no_timing) if args.json else rep.to_text(not args.no_timing)
    _emit(text, args.output)
    if args.output:
        sys.stdout.write(rep.to_text(not args.no_timing))
    return EXIT_OK if rep.consistent else EXIT_INCONSISTENT


def cmd_potential(args) -> int:
    D = read_digraph(args.file)
    value = rho(D, args.subset)
    print(f"rho {value.rho}")
    print(f"n_term {value.n_term}")
    print(f"m_term {value.m_term}")
    print(f"pi_term {value.pi_term}")
    if args.min_subset is not None:
        members, best = min_potential_subset(D, args.min_subset)
        print("min_subset " + " ".join(map(str, members)))
        print(f"min_rho {best.rho}")
    return EXIT_OK


def _q(x: Fraction) -> str:
    return str(x)


def cmd_bounds(args) -> int:
    if args.family:
        print("i k n m m/n 2k-3 strict")
        for k in args.k:
            for i in args.i:
                fs = family_sizes(i, k)
                strict = fs.ratio < 2 * k - 3
                print(f"{i} {k} {fs.n} {fs.m} {_q(fs.ratio)} {2 * k - 3} {'yes' if strict else 'no'}")
        return EXIT_OK
    print("k n lower_ok ceil lower_o3 ceil o3_upper (2k-3)n")
    for k in args.k:
        for n in args.n:
            lb = lower_bound_ok(k, n)
            if k == 3:
                l3 = lower_bound_o3(n)
                three = f"{_q(l3)} {ceil_fraction(l3)} {o3_upper(n) if n >= 12 else '-'}"
            else:
                three = "- - -"
            print(f"{k} {n} {_q(lb)} {ceil_fraction(lb)} {three} {(2 * k - 3) * n}")
    return EXIT_OK


PREDICATES: dict[str, Callable[[Digraph], bool]] = {
    "acyclic": lambda T: is_acyclic(T),
    "2dicolourable": lambda T: is_k_dicolourable(T, 2) is not None,
    "3dicolourable": lambda T: is_k_dicolourable(T, 3) is not None,
}


def cmd_sweep(args) -> int:
    summary = enumerate_labelled_tournaments(args.n, PREDICATES[args.predicate])
    print(f"n {summary.n}")
    print(f"predicate {args.predicate}")
    print(f"visited {summary.visited}")
    print(f"satisfied {summary.satisfied} / {summary.visited}")
    if summary.first_failure is not None:
        arcs = " ".join(f"{u}>{v}" for u, v in summary.first_failure.arcs)
        print(f"first_failure {arcs}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dicritical", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def budget(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="search-node limit for exact dicolouring")

    g = sub.add_parser("gen", help="generate a named digraph family")
    g.add_argument("family", choices=GEN_FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--height", type=int)
    g.add_argument("--spikes", type=_ints)
    g.add_argument("--i", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--c1", type=int, help="first directed cycle length (trianglejoin)")
    g.add_argument("--c2", type=int, help="second directed cycle length (trianglejoin)")
    g.add_argument("--residues", type=_ints)
    g.add_argument("--kind", choices=[k.value for k in C.GadgetKind])
    g.add_argument("--lengths", type=_ints)
    g.add_argument("--input", help="digraph file (dknob)")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("chi", help="dichromatic number with a witness colouring")
    c.add_argument("file")
    c.add_argument("--max-k", type=int)
    budget(c)
    c.set_defaults(func=cmd_chi)

    d = sub.add_parser("dicritical", help="decide k-dicriticality")
    d.add_argument("file")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--threads", type=int, default=_default_threads())
    d.add_argument("--json", action="store_true")
    d.add_argument("--witnesses", action="store_true")
    budget(d)
    d.set_defaults(func=cmd_dicritical)

    a = sub.add_parser("audit", help="full audit of a claimed k-dicritical digraph")
    a.add_argument("file")
    a.add_argument("--k", type=int, default=3)
    a.add_argument("--threads", type=int, default=_default_threads())
    a.add_argument("--json", action="store_true")
    a.add_argument("--no-timing", action="store_true")
    a.add_argument("-o", "--output")
    budget(a)
    a.set_defaults(func=cmd_audit)

    pt = sub.add_parser("potential", help="potential of a vertex set")
    pt.add_argument("file")
    pt.add_argument("--subset", type=_ints)
    pt.add_argument("--min-subset", type=int, metavar="MIN_SIZE")
    pt.set_defaults(func=cmd_potential)

    b = sub.add_parser("bounds", help="tables of the arc-count bounds")
    b.add_argument("--k", type=_range, default=[3])
    b.add_argument("--n", type=_range, default=list(range(12, 21)))
    b.add_argument("--i", type=_range, default=[1])
    b.add_argument("--family", action="store_true", help="tabulate G^i_k sizes instead")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sweep", help="exhaustive labelled tournament sweep")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--predicate", choices=sorted(PREDICATES), default="2dicolourable")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DicriticalError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
