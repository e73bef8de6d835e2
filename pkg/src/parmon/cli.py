"""Command-line interface: ``parmon <command> ...``.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 horizon or cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import classifier as C
from . import generation as G
from . import partition as P
from .cardinal import CardinalError
from .infinite import (FinitaryPartition, HorizonExceeded, canonical_gen_pair, compose_lazy,
                       evaluate_word, factorize_pi, random_finitary, sierpinski_embed,
                       sierpinski_word)
from .partition import canonical_blocks

OK, NEGATIVE, INPUT_ERROR, HORIZON = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    degree: Optional[int] = None
    window: int = 64
    fuel: int = 10_000
    cap: int = G.DEFAULT_CAP
    seed: int = 0
    output: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        for name in ("window", "fuel", "cap"):
            if getattr(self, name) <= 0:
                raise InputError(f"--{name} must be positive")
        if self.degree is not None and self.degree <= 0:
            raise InputError("--n must be positive")


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not JSON ({exc})") from exc


def _partition(path: str) -> P.Partition:
    try:
        return P.parse(_read(path))
    except P.ParseError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _is_block_list(x) -> bool:
    return isinstance(x, list) and all(isinstance(b, list) for b in x)


def _partition_list(path: str) -> list:
    """A JSON list of partitions, or one partition literal per line."""
    text = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = None
    try:
        if data is None:
            out = [P.parse(line) for line in text.splitlines() if line.strip()]
        elif isinstance(data, dict) or _is_block_list(data) and data and \
                all(isinstance(v, int) for blk in data for v in blk):
            out = [P.parse(json.dumps(data))]
        elif isinstance(data, list):
            out = [P.parse(json.dumps(x)) for x in data]
        else:
            raise InputError(f"{path}: expected partitions")
    except P.ParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if out and len({a.degree for a in out}) > 1:
        raise InputError(f"{path}: partitions have different degrees")
    return out


def _finitary(obj, where: str) -> FinitaryPartition:
    try:
        return FinitaryPartition.parse(json.dumps(obj))
    except P.ParseError as exc:
        raise InputError(f"{where}: {exc}") from exc


def _finitary_list(path: str) -> list:
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("targets", [])
    if not isinstance(data, list):
        raise InputError(f"{path}: expected a list of finitary partitions")
    return [_finitary(x, f"{path}[{i}]") for i, x in enumerate(data)]


def _blocks_json(blocks) -> str:
    return json.dumps([list(b) for b in canonical_blocks(blocks)], separators=(",", ":"))


class _Out:
    def __init__(self, path: Optional[str]):
        self.fh = open(path, "w", encoding="utf-8") if path else sys.stdout

    def line(self, obj) -> None:
        text = obj if isinstance(obj, str) else json.dumps(obj, separators=(",", ":"))
        self.fh.write(text + "\n")

    def close(self):
        if self.fh is not sys.stdout:
            self.fh.close()


# commands ---------------------------------------------------------------------------


def cmd_compose(cfg: RunConfig, out: _Out) -> int:
    a, b = (_partition(p) for p in cfg.inputs)
    if a.degree != b.degree:
        raise InputError(f"degree mismatch: {a.degree} and {b.degree}")
    c = P.compose(a, b)
    out.line(P.format_text(c) if cfg.format == "text" else P.format_json(c))
    return OK


def params_report(a: P.Partition) -> dict:
    rep = {"degree": a.degree, "dom": len(P.dom(a)), "codom": len(P.codom(a))}
    for mu in (1, 2, 3):
        rep[f"k{mu}"] = str(P.param_k(a, mu))
        rep[f"kstar{mu}"] = str(P.param_kstar(a, mu))
        rep[f"d{mu}"] = str(P.param_d(a, mu))
        rep[f"dstar{mu}"] = str(P.param_dstar(a, mu))
    rep.update({"s": str(P.s(a)), "sstar": str(P.sstar(a)), "sh": str(P.sh(a)),
                "warp": sorted(P.warp(a)), "inL": P.in_L(a), "inR": P.in_R(a),
                "unit": P.is_unit(a), "idempotent": P.is_idempotent(a)})
    return rep


def cmd_params(cfg: RunConfig, out: _Out) -> int:
    rep = params_report(_partition(cfg.inputs[0]))
    if cfg.format == "text":
        for k, v in rep.items():
            out.line(f"{k}\t{v}")
    else:
        out.line(rep)
    return OK


def cmd_closure(cfg: RunConfig, out: _Out, words: bool) -> int:
    gens = _partition_list(cfg.inputs[0])
    if not gens:
        raise InputError("no generators given")
    res = G.closure(gens, cap=cfg.cap, words=words)
    header = {"degree": res.degree, "generators": [[list(b) for b in g.blocks] for g in gens],
              "saturated": res.saturated, "count": len(res), "seed": cfg.seed}
    if words:
        header["wordLengths"] = G.word_length_stats(res)
    out.line(header)
    for a in res.elements:
        out.line(P.format_json(a))
    return OK if res.saturated else HORIZON


def cmd_relrank(cfg: RunConfig, out: _Out, base: str, mode: str) -> int:
    cert = G.relative_rank(base, cfg.degree, mode=mode, seed=cfg.seed)
    out.line(cert.to_json())
    return OK


def cmd_classify(cfg: RunConfig, out: _Out, mod: str) -> int:
    try:
        pa, pb = (C.SidedProfile.from_json(_load_json(p)) for p in cfg.inputs)
        verdict = (C.classify_mod_S if mod == "S" else C.classify_mod_E)(pa, pb)
    except (C.ProfileError, C.UnsupportedGround, CardinalError) as exc:
        raise InputError(str(exc)) from exc
    out.line(verdict.to_json())
    return OK if verdict.generates else NEGATIVE


def cmd_sierpinski(cfg: RunConfig, out: _Out, n: int, random_targets: int, verify: bool) -> int:
    if cfg.inputs and cfg.inputs[0]:
        targets = _finitary_list(cfg.inputs[0])
    else:
        rng = random.Random(cfg.seed)
        targets = [random_finitary(rng, 8) for _ in range(random_targets)]
    if n < 1:
        raise InputError("--n must be at least 1")
    beta, gamma = sierpinski_embed(targets)
    word = sierpinski_word(n)
    got = evaluate_word(word, beta, gamma, fuel=cfg.fuel, window=cfg.window)
    out.line(_blocks_json(got))
    if verify:
        expected = targets[n - 1] if n <= len(targets) else FinitaryPartition.identity()
        ok = got == expected.window_blocks(cfg.window)
        out.line({"word": "".join(word.letters), "length": len(word), "equal-on-window": ok})
        return OK if ok else NEGATIVE
    return OK


def cmd_factorize(cfg: RunConfig, out: _Out, verify: bool) -> int:
    gamma = _finitary(_load_json(cfg.inputs[0]), cfg.inputs[0])
    alpha, beta = canonical_gen_pair()
    pi = factorize_pi(gamma)
    product = compose_lazy(compose_lazy(alpha, pi, cfg.fuel), beta, cfg.fuel)
    got = product.window_blocks(cfg.window)
    out.line(_blocks_json(got))
    if verify:
        ok = got == gamma.window_blocks(cfg.window)
        out.line({"pieces": [pc.label for pc in pi.pieces], "equal-on-window": ok})
        return OK if ok else NEGATIVE
    return OK


# argument parsing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parmon", description="Partition monoid computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", "-o", help="write results here instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        return p

    p = common(sub.add_parser("compose", help="product of two partitions"))
    p.add_argument("a")
    p.add_argument("b")

    p = common(sub.add_parser("params", help="parameter report for one partition"))
    p.add_argument("input")

    p = common(sub.add_parser("closure", help="semigroup generated by a list of partitions"))
    p.add_argument("gens")
    p.add_argument("--cap", type=int, default=G.DEFAULT_CAP)
    p.add_argument("--words", action="store_true", help="record shortest words")

    p = common(sub.add_parser("relrank", help="relative rank of P_n modulo S, E or ES"))
    p.add_argument("--base", choices=("S", "E", "ES"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")

    p = common(sub.add_parser("classify", help="decide a generating pair from two profiles"))
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--mod", choices=("S", "E"), default="S")

    p = common(sub.add_parser("sierpinski", help="evaluate the Sierpinski word on a window"))
    p.add_argument("--targets", help="JSON list of finitary partitions")
    p.add_argument("--random-targets", type=int, default=5,
                   help="without --targets, draw this many seeded targets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, default=64)
    p.add_argument("--fuel", type=int, default=10_000)
    p.add_argument("--verify", action="store_true")

    p = common(sub.add_parser("factorize", help="check gamma = alpha pi beta on a window"))
    p.add_argument("--gamma", required=True)
    p.add_argument("--window", type=int, default=64)
    p.add_argument("--fuel", type=int, default=10_000)
    p.add_argument("--verify", action="store_true")
    return ap


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    out = None
    try:
        cfg = RunConfig(
            command=args.command,
            inputs={"compose": lambda: [args.a, args.b], "params": lambda: [args.input],
                    "closure": lambda: [args.gens], "classify": lambda: [args.alpha, args.beta],
                    "sierpinski": lambda: [args.targets], "factorize": lambda: [args.gamma],
                    }.get(args.command, lambda: [])(),
            degree=getattr(args, "n", None) if args.command == "relrank" else None,
            window=getattr(args, "window", 64), fuel=getattr(args, "fuel", 10_000),
            cap=getattr(args, "cap", G.DEFAULT_CAP), seed=args.seed,
            output=args.output, format=args.format)
        out = _Out(cfg.output)
        c = cfg.command
        if c == "compose":
            return cmd_compose(cfg, out)
        if c == "params":
            return cmd_params(cfg, out)
        if c == "closure":
            return cmd_closure(cfg, out, args.words)
        if c == "relrank":
            return cmd_relrank(cfg, out, args.base, args.mode)
        if c == "classify":
            return cmd_classify(cfg, out, args.mod)
        if c == "sierpinski":
            return cmd_sierpinski(cfg, out, args.n, args.random_targets, args.verify)
        return cmd_factorize(cfg, out, args.verify)
    except (InputError, G.SizeGuardError) as exc:
        print(f"parmon: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except HorizonExceeded as exc:
        print(f"parmon: {exc}", file=sys.stderr)
        return HORIZON
    finally:
        if out is not None:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
