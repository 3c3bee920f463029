"""Command-line front end.

    hopfbraid verify      --family suzuki --N 1 --L 2 --nu + --lambda -
    hopfbraid braidings   --family h8
    hopfbraid invariants  --family cyclic --n 5 --r 1 --d 1
    hopfbraid classify    h8 --json

Every command is a thin wrapper over the library.  Exit status is 0 on
success, 1 when a verification fails and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import verify_hopf_axioms
from .braiding import coribbon_set, drinfeld_functional, enumerate_braidings, generator_values
from .cache import TableCache
from .cyclotomic import render
from .errors import HopfError
from .invariants import (
    braiding_handle,
    invariant_signature,
    p_polynomial,
    partition_by_signature,
    q_polynomial,
    rmatrix_handle,
    signature_to_json,
)
from .rmatrix import cyclic_R_matrices, verify_drinfeld, verify_quasitriangular
from .suzuki import SuzukiParams, construct_suzuki, suzuki_group_likes, suzuki_simple_comodules

COMMANDS = ("verify", "suzuki", "braidings", "invariants", "classify", "report")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class TargetSpec:
    family: str
    n: int | None = None
    N: int | None = None
    L: int | None = None
    nu: int = 1
    lam: int = 1

    def validate(self) -> "TargetSpec":
        if self.family == "cyclic":
            if self.n is None or self.n < 1:
                raise UsageError("cyclic targets need --n >= 1")
        elif self.family == "suzuki":
            if self.N is None or self.L is None:
                raise UsageError("suzuki targets need --N and --L")
            if self.N < 1 or self.L < 2:
                raise UsageError("need N >= 1 and L >= 2")
        elif self.family != "h8":
            raise UsageError(f"unknown family {self.family!r}")
        return self

    @property
    def dim(self) -> int:
        if self.family == "cyclic":
            return self.n
        if self.family == "h8":
            return 8
        return 4 * self.N * self.L

    def params(self) -> SuzukiParams:
        if self.family == "h8":
            return SuzukiParams(1, 2, 1, -1)
        return SuzukiParams(self.N, self.L, self.nu, self.lam)

    def to_json(self) -> dict:
        if self.family == "cyclic":
            return {"family": "cyclic", "n": self.n}
        p = self.params()
        return {"family": self.family, "N": p.N, "L": p.L, "nu": p.nu, "lambda": p.lam}


def parse_target(text: str) -> TargetSpec:
    """``h8``, ``cyclic:5`` or ``suzuki:1,2,+,-``."""
    family, _, rest = text.partition(":")
    family = family.strip().lower()
    try:
        if family == "h8":
            return TargetSpec("h8").validate()
        if family == "cyclic":
            return TargetSpec("cyclic", n=int(rest)).validate()
        if family == "suzuki":
            parts = [x.strip() for x in rest.split(",")]
            if len(parts) != 4:
                raise UsageError("suzuki targets look like suzuki:N,L,nu,lambda")
            return TargetSpec("suzuki", N=int(parts[0]), L=int(parts[1]), nu=_sign(parts[2]), lam=_sign(parts[3])).validate()
    except ValueError as exc:
        raise UsageError(f"bad target {text!r}: {exc}") from None
    raise UsageError(f"unknown family {family!r}")


def _sign(s: str) -> int:
    if s in ("+", "+1", "1"):
        return 1
    if s in ("-", "-1"):
        return -1
    raise UsageError(f"sign must be + or -, got {s!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS, help="do not read or write the table cache")
    common.add_argument("--max-dim", type=int, default=argparse.SUPPRESS, help="refuse algebras above this dimension (default 64)")

    target = argparse.ArgumentParser(add_help=False)
    target.add_argument("target", nargs="?", help="h8, cyclic:<n> or suzuki:<N>,<L>,<nu>,<lambda>")
    target.add_argument("--target", dest="target_opt")
    target.add_argument("--family", choices=("cyclic", "suzuki", "h8"))
    target.add_argument("--n", type=int)
    target.add_argument("--N", type=int)
    target.add_argument("--L", type=int)
    target.add_argument("--nu", default="+")
    target.add_argument("--lambda", dest="lam", default="+")

    parser = argparse.ArgumentParser(prog="hopfbraid", parents=[common], description="Braided Hopf algebra invariants.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common, target], help="check the Hopf algebra axioms")
    sub.add_parser("suzuki", parents=[common, target], help="summarize an algebra")
    sub.add_parser("braidings", parents=[common, target], help="list braidings or R-matrices")
    p = sub.add_parser("invariants", parents=[common, target], help="polynomial invariants")
    p.add_argument("--r", type=int, help="index of the R-matrix or braiding (default: all)")
    p.add_argument("--d", type=int, help="dimension of the simples (default: all that occur)")
    sub.add_parser("classify", parents=[common, target], help="partition by invariants")
    sub.add_parser("report", parents=[common, target], help="all of the above")
    return parser


def _resolve_target(args) -> TargetSpec:
    if args.target_opt or args.target:
        return parse_target(args.target_opt or args.target)
    if args.family is None:
        raise UsageError("a target is required (positional, --target or --family)")
    return TargetSpec(args.family, n=args.n, N=args.N, L=args.L, nu=_sign(args.nu), lam=_sign(args.lam)).validate()


# -- command bodies (return a JSON-ready dict and a list of text lines) ---------------------

class Context:
    def __init__(self, spec: TargetSpec, use_cache: bool):
        self.spec = spec
        self.cache = TableCache() if use_cache else None
        self._algebra = None
        self._structures = None

    @property
    def algebra(self):
        if self._algebra is None:
            if self.spec.family == "cyclic":
                self._structures = cyclic_R_matrices(self.spec.n)
                self._algebra = self._structures[0].algebra
            else:
                self._algebra = construct_suzuki(self.spec.params(), cache=self.cache)
        return self._algebra

    @property
    def structures(self) -> list:
        A = self.algebra
        if self._structures is None:
            self._structures = enumerate_braidings(A)
        return self._structures

    def handles(self) -> list:
        if self.spec.family == "cyclic":
            return [rmatrix_handle(R) for R in self.structures]
        simples = suzuki_simple_comodules(self.algebra)
        return [braiding_handle(B, simples) for B in self.structures]


def _structure_name(S) -> str:
    return S.name if hasattr(S, "sigma") else S.label


def cmd_verify(ctx: Context, args) -> tuple[dict, list[str], bool]:
    rep = verify_hopf_axioms(ctx.algebra)
    data = {"target": ctx.spec.to_json(), "dim": ctx.algebra.dim, "axioms": {k: v is None for k, v in rep.results.items()}}
    lines = [f"{ctx.algebra.name}: dimension {ctx.algebra.dim}"] + rep.lines()
    ok = rep.ok
    if ctx.spec.family == "h8":
        from .h8 import kac_paljutkin_iso_check

        checks = kac_paljutkin_iso_check(ctx.algebra)
        data["kac_paljutkin"] = checks
        lines += [f"{'ok  ' if v else 'FAIL'} {k}" for k, v in checks.items()]
    return data, lines, ok


def cmd_suzuki(ctx: Context, args) -> tuple[dict, list[str], bool]:
    A = ctx.algebra
    data = {"target": ctx.spec.to_json(), "dim": A.dim, "basis": list(A.labels)}
    lines = [f"{A.name}: dimension {A.dim}", "basis: " + ", ".join(A.labels)]
    if ctx.spec.family != "cyclic":
        gl = suzuki_group_likes(A)
        simples = suzuki_simple_comodules(A)
        data["group_likes"] = [_elem_json(g) for g in gl]
        data["simples"] = [{"label": M.label, "dim": M.dim, "character": _elem_json(M.character())} for M in simples]
        lines.append(f"group-likes: {len(gl)}")
        for M in simples:
            lines.append(f"  {M.label} (dim {M.dim}): ch = {_elem_text(M.character())}")
    return data, lines, True


def _elem_json(x) -> dict:
    return {x.algebra.labels[k]: c.to_json() for k, c in sorted(x.terms.items())}


def _elem_text(x) -> str:
    out = ""
    for k, c in sorted(x.terms.items()):
        lab = x.algebra.labels[k]
        s = render(c)
        neg = s.startswith("-") and "+" not in s and " - " not in s
        if neg:
            s = s[1:]
        term = lab if s == "1" else f"({s}){lab}"
        if not out:
            out = ("-" if neg else "") + term
        else:
            out += (" - " if neg else " + ") + term
    return out or "0"


def cmd_braidings(ctx: Context, args) -> tuple[dict, list[str], bool]:
    items = []
    lines = []
    ok = True
    if ctx.spec.family == "cyclic":
        for R in ctx.structures:
            q = verify_quasitriangular(R)
            d = verify_drinfeld(R)
            ok = ok and q.ok and d.ok
            items.append({"name": R.label, "quasitriangular": q.ok, "drinfeld": d.ok})
            lines.append(f"{R.label}: quasitriangular={q.ok} drinfeld={d.ok}")
    else:
        A = ctx.algebra
        for k, B in enumerate(ctx.structures):
            ups = generator_values(drinfeld_functional(B), A)
            cr = coribbon_set(B)
            items.append({
                "index": k,
                "name": _structure_name(B),
                "kind": B.kind,
                "params": {key: (v.to_json() if hasattr(v, "to_json") else v) for key, v in sorted(B.params.items())},
                "drinfeld_on_generators": {f"x{i}{j}": v.to_json() for (i, j), v in sorted(ups.items())},
                "coribbon_count": len(cr),
            })
            ud = ", ".join(f"x{i}{j}->{render(v)}" for (i, j), v in sorted(ups.items()))
            lines.append(f"[{k}] {_structure_name(B)}  Upsilon: {ud}  coribbon elements: {len(cr)}")
    lines.insert(0, f"{len(items)} braidings")
    return {"target": ctx.spec.to_json(), "braidings": items}, lines, ok


def cmd_invariants(ctx: Context, args) -> tuple[dict, list[str], bool]:
    handles = ctx.handles()
    idx = range(len(handles))
    if getattr(args, "r", None) is not None:
        r = args.r % len(handles) if ctx.spec.family == "cyclic" else args.r
        if not 0 <= r < len(handles):
            raise UsageError(f"--r must be in 0..{len(handles) - 1}")
        idx = [r]
    items = []
    lines = []
    for k in idx:
        h = handles[k]
        name = _structure_name(h.structure)
        if getattr(args, "d", None) is not None:
            if args.d < 1:
                raise UsageError("--d must be positive")
            rows = [(args.d, p_polynomial(h, args.d), q_polynomial(h, args.d))]
        else:
            rows = list(invariant_signature(h))
        items.append({"index": k, "name": name, "polynomials": signature_to_json(tuple(rows))})
        for d, P, Q in rows:
            lines.append(f"[{k}] {name}  d={d}  P = {P.render()}  Q = {Q.render()}")
    return {"target": ctx.spec.to_json(), "invariants": items}, lines, True


def cmd_classify(ctx: Context, args) -> tuple[dict, list[str], bool]:
    if ctx.spec.family == "h8":
        from .h8 import classify_h8

        rep = classify_h8(ctx.algebra)
        data = rep.to_json()
        data["target"] = ctx.spec.to_json()
        lines = [f"{len(rep.classes)} classes"]
        for cls in data["classes"]:
            lines.append("  {" + ", ".join(cls) + "}")
        for w in data["witnesses"]:
            lines.append(f"  merged by transport: {w['from']} o ({w['automorphism']} x {w['automorphism']}) = {w['to']}")
        return data, lines, True
    handles = ctx.handles()
    names = [_structure_name(h.structure) for h in handles]
    classes = partition_by_signature(handles)
    data = {
        "target": ctx.spec.to_json(),
        "classes": [[names[k] for k in cls] for cls in classes],
        "representatives": [names[cls[0]] for cls in classes],
        "note": "equal invariants are necessary for braided Morita equivalence, not sufficient",
    }
    lines = [f"{len(classes)} classes by invariant signature"] + ["  {" + ", ".join(c) + "}" for c in data["classes"]]
    return data, lines, True


def cmd_report(ctx: Context, args) -> tuple[dict, list[str], bool]:
    out: dict = {"target": ctx.spec.to_json()}
    lines: list[str] = []
    ok = True
    for name, fn in (("axioms", cmd_verify), ("algebra", cmd_suzuki), ("braidings", cmd_braidings),
                     ("invariants", cmd_invariants), ("classification", cmd_classify)):
        data, sect, good = fn(ctx, args)
        data.pop("target", None)
        out[name] = data
        lines += [f"== {name} =="] + sect
        ok = ok and good
    return out, lines, ok


HANDLERS = {
    "verify": cmd_verify,
    "suzuki": cmd_suzuki,
    "braidings": cmd_braidings,
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "report": cmd_report,
}


def emit_json(data: dict) -> bytes:
    return (json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def run_command(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        spec = _resolve_target(args)
        max_dim = getattr(args, "max_dim", 64)
        if spec.dim > max_dim:
            raise UsageError(f"algebra dimension {spec.dim} exceeds --max-dim {max_dim}")
        ctx = Context(spec, use_cache=not getattr(args, "no_cache", False))
        data, lines, ok = HANDLERS[args.command](ctx, args)
    except UsageError as exc:
        print(f"hopfbraid: error: {exc}", file=stderr)
        return 2
    except HopfError as exc:
        print(f"hopfbraid: verification failed: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if getattr(args, "json", False):
        buf = getattr(stdout, "buffer", None)
        payload = emit_json(data)
        if buf is not None:
            stdout.flush()
            buf.write(payload)
            buf.flush()
        else:
            stdout.write(payload.decode("utf-8"))
    else:
        stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
