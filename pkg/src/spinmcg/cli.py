"""Command-line front end.

Exit codes: 0 success, 1 a verification came out negative, 2 bad input.
JSON is the default output; ``--format text`` prints paper-style notation
(X*_2 is written ``Xs2``) and ``--format dot`` is available for the orbit
graph.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from . import groups as gr
from . import rewriter as rw
from . import schreier as sc
from . import symplectic as sp
from . import transvections as tv
from . import words as wd


class InputError(Exception):
    pass


def _ints(text: str | None, what: str) -> tuple[int, ...]:
    if text is None:
        raise InputError(f"--{what} is required")
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(f"bad {what} entry {tok!r}") from None
    if not out:
        raise InputError(f"empty --{what}")
    return tuple(out)


def _vector(args, min_genus: int = 1) -> tuple[int, ...]:
    v = _ints(args.vector, "vector")
    if len(v) != 2 * args.g:
        raise InputError(f"--vector has {len(v)} entries, genus {args.g} needs {2 * args.g}")
    if args.g < min_genus:
        raise InputError(f"{args.cmd} needs --g >= {min_genus}")
    return v


def _word(args) -> wd.Word:
    if args.word is None:
        raise InputError("--word is required")
    return wd.parse_word(args.word, args.g)


def _read_matrix(path: str | None) -> np.ndarray:
    if path is None:
        raise InputError("--matrix is required")
    with open(path) as fh:
        text = fh.read()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        rows = [list(_ints(line, "matrix")) for line in text.splitlines() if line.strip()]
    M = np.array(rows, dtype=object)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2:
        raise InputError(f"matrix must be square of even size, got shape {M.shape}")
    return M


def _read_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _matrix_rows(M) -> list[list[int]]:
    return [[int(c) for c in row] for row in M]


def _matrix_text(M) -> str:
    rows = _matrix_rows(M)
    w = max(len(str(c)) for r in rows for c in r)
    return "\n".join(" ".join(str(c).rjust(w) for c in r) for r in rows)


def _vec_text(v) -> str:
    return ",".join(str(int(c)) for c in v)


# --- subcommands -----------------------------------------------------------
# Each returns (payload, text, exit code).


def cmd_eval(args):
    w = _word(args)
    M = wd.eval_mod2(w, args.g) if args.mod2 else wd.eval_int(w, args.g)
    payload = {"word": wd.format_word(w), "genus": args.g,
               "ring": "Z2" if args.mod2 else "Z", "matrix": _matrix_rows(M)}
    return payload, _matrix_text(M), 0


def cmd_spin_check(args):
    w = _word(args)
    ok = wd.spin_check(w, args.g)
    return {"word": wd.format_word(w), "spin": ok}, str(ok).lower(), 0 if ok else 1


def cmd_arf(args):
    q = _ints(args.form, "form")
    if len(q) != 2 * args.g or any(c not in (0, 1) for c in q):
        raise InputError(f"--form must be {2 * args.g} bits")
    a = sp.arf(q)
    return {"form": list(q), "arf": a}, str(a), 0


def cmd_forms(args):
    forms = sp.enumerate_forms(args.g, args.arf)
    return ({"genus": args.g, "arf": args.arf, "count": len(forms), "forms": [list(q) for q in forms]},
            "\n".join("".join(map(str, q)) for q in forms), 0)


def cmd_rewrite(args):
    if args.check:
        cert = rw.RewriteCert.from_json(json.dumps(_read_json(args.check)), args.g)
    else:
        if args.index is None:
            raise InputError("--index is required")
        cert = rw.rewrite_square_conjugate(_word(args), args.index, args.g)
    ok = rw.check_rewrite(cert)
    payload = json.loads(cert.to_json())
    payload["verified"] = ok
    return payload, cert.text(), 0 if ok else 1


def _cert_cmd(args, fn):
    if args.check:
        cert = tv.ReductionCert.from_json(_read_json(args.check))
        ok = cert.verify() and (fn is not tv.reduce_to_delta or tv.is_delta_shape(cert.output))
    else:
        cert = fn(_vector(args))
        ok = cert.verify()
    payload = cert.to_json()
    payload["verified"] = ok
    lines = [_vec_text(cert.input)]
    a = tuple(cert.input)
    for m in cert.moves:
        a = m.apply(a)
        lines.append(f"{'[+]' if m.sign > 0 else '[-]'} {_vec_text(m.operand)} -> {_vec_text(a)}")
    return payload, "\n".join(lines), 0 if ok else 1


def cmd_reduce_blocks(args):
    return _cert_cmd(args, tv.reduce_blocks)


def cmd_reduce_delta(args):
    return _cert_cmd(args, tv.reduce_to_delta)


def cmd_factor_sqtv(args):
    if args.check:
        f = tv.SquareTransvectionFactor.from_json(_read_json(args.check))
    else:
        f = tv.factor_square_transvection(_vector(args))
    ok = f.verify() and f.cert.verify()
    payload = f.to_json()
    payload["verified"] = ok
    conj = " ".join(f"T[{_vec_text(b)}]^{e}" for e, b in f.conjugator) or "1"
    return payload, f"T[{_vec_text(f.vector)}]^2 = U^-1 T[{_vec_text(f.core)}]^2 U,  U = {conj}", 0 if ok else 1


def cmd_lambda_reduce(args):
    if args.check:
        d = _read_json(args.check)
        z, moves = tuple(d["input"]), [tuple(m) for m in d["moves"]]
        out = tv.replay_lambda(z, moves)
        ok = out == tuple(d["output"]) and out in set(tv.lambda_generators(sp.genus_of(z)).values())
    else:
        z = _vector(args, min_genus=2)
        moves = tv.lambda_reduce(z, full=args.full)
        out = tv.replay_lambda(z, moves)
        ok = True
    names = {v: k for k, v in tv.lambda_generators(sp.genus_of(z)).items()}
    payload = {"input": list(sp.mod2(z)), "moves": [list(m) for m in moves],
               "output": list(out), "generator": names.get(out), "verified": ok}
    text = "\n".join([_vec_text(z)] + [f"[] {_vec_text(m)}" for m in moves]
                     + [f"= {_vec_text(out)} ({names.get(out)})"])
    return payload, text, 0 if ok else 1


def cmd_factor_orth(args):
    if args.check:
        d = _read_json(args.check)
        word = tv.OrthWord(int(d["genus"]), list(d["tags"]))
        M = np.array(d["matrix"], dtype=np.int64) % 2
        ok = bool(np.array_equal(word.matrix(), M))
    else:
        M = np.array(_read_matrix(args.matrix), dtype=np.int64) % 2
        try:
            word = tv.factor_orthogonal(M, allow_t=args.allow_t)
        except ValueError as e:
            return {"matrix": _matrix_rows(M), "error": str(e), "verified": False}, f"FAIL: {e}", 1
        ok = bool(np.array_equal(word.matrix(), M))
    payload = {"genus": word.genus, "tags": word.tags, "matrix": _matrix_rows(M), "verified": ok}
    return payload, " ".join(word.tags) or "1", 0 if ok else 1


def cmd_witness(args):
    if args.g < 3:
        raise InputError("witness needs an explicit --g >= 3")
    if args.check:
        d = _read_json(args.check)
        v, tokens = tuple(d["vector"]), list(d["tokens"])
    else:
        v = _vector(args, min_genus=3)
        tokens = tv.orbit_witness(v, args.g)
    image = tv.replay_witness(v, tokens, args.g)
    ok = image in set(tv.witness_targets(args.g))
    payload = {"vector": list(sp.mod2(v)), "tokens": tokens, "image": list(image), "verified": ok}
    return payload, (" ".join(tokens) or "1") + f"  ->  {_vec_text(image)}", 0 if ok else 1


def _genus2_only(args):
    if args.g != 2:
        raise InputError(f"{args.cmd} is a genus-2 computation")


def _classes(args):
    if not args.classes:
        return None
    with open(args.classes) as fh:
        return wd.CurveClassTable.from_json(fh.read(), 2)


def cmd_orbit_graph(args):
    _genus2_only(args)
    G = sc.orbit_graph(_classes(args))
    payload = {"vertices": [list(v) for v in G.vertices],
               "edges": [{"from": list(a), "letter": f"C{i}", "to": list(b)} for a, i, b in G.edges]}
    return payload, G.to_dot(), 0


def cmd_schreier_table(args):
    _genus2_only(args)
    entries = sc.build_table(_classes(args))
    ok = all(e.ok for e in entries)
    return [e.to_dict() for e in entries], sc.table_to_text(entries), 0 if ok else 1


def cmd_verify_table1(args):
    _genus2_only(args)
    r = sc.verify_table1(_classes(args))
    text = f"{r['status']}, {r['passed']}/{r['total']} entries"
    for f in r["failures"]:
        text += f"\n  {f['row']} x {f['column']}: expected {f['expected']}, got {f['matched'] or f['raw_word']}"
    return r, text, 0 if r["status"] == "PASS" else 1


def cmd_group_orders(args):
    if not 1 <= args.g <= 3:
        raise InputError("group-orders supports --g 1..3")
    orders = gr.group_orders([args.g])
    return orders, "\n".join(f"|{k}| = {v}" for k, v in orders.items()), 0


COMMANDS = {
    "eval": (cmd_eval, "matrix of a word over Z (or Z2 with --mod2)"),
    "spin-check": (cmd_spin_check, "does the word preserve q_0?"),
    "arf": (cmd_arf, "Arf invariant of a form given by its basis values"),
    "forms": (cmd_forms, "enumerate quadratic forms, optionally by Arf invariant"),
    "rewrite": (cmd_rewrite, "express W C_i C_i W^-1 through X, X*, D tokens"),
    "reduce-blocks": (cmd_reduce_blocks, "blockwise Euclid reduction certificate"),
    "reduce-delta": (cmd_reduce_delta, "full reduction to a delta-shaped vector"),
    "factor-sqtv": (cmd_factor_sqtv, "square transvection as a conjugate of a canonical one"),
    "lambda-reduce": (cmd_lambda_reduce, "reduce q_0(z)=1 classes to the standard generators"),
    "factor-orth": (cmd_factor_orth, "factor an O(2g, Z2) matrix into standard transvections"),
    "witness": (cmd_witness, "word carrying a mod-2 class to a target class"),
    "orbit-graph": (cmd_orbit_graph, "genus-2 action graph on Arf-0 forms"),
    "schreier-table": (cmd_schreier_table, "genus-2 Schreier generators"),
    "verify-table1": (cmd_verify_table1, "compare Schreier generators with the reference table"),
    "group-orders": (cmd_group_orders, "orders of Sp(2g, Z2) and O(2g, Z2) by closure"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g", type=int, default=2, help="genus (default 2)")
    common.add_argument("--word")
    common.add_argument("--vector")
    common.add_argument("--form")
    common.add_argument("--matrix", help="path to a matrix (JSON rows or whitespace text)")
    common.add_argument("--format", choices=["json", "text", "dot"], default=None)
    common.add_argument("--check", help="path to a certificate to re-verify")
    common.add_argument("--index", type=int, help="index i of C_i for rewrite")
    common.add_argument("--arf", type=int, choices=[0, 1], help="filter for forms")
    common.add_argument("--mod2", action="store_true", help="eval over Z2")
    common.add_argument("--full", action="store_true", help="lambda-reduce to the terminal forms")
    common.add_argument("--allow-t", action="store_true", help="factor-orth may use the image of T")
    common.add_argument("--classes", help="curve-class table JSON (genus-2 commands)")
    p = argparse.ArgumentParser(prog="spinmcg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    for name, (_, help_) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.g < 1:
        print("error: --g must be positive", file=sys.stderr)
        return 2
    fn = COMMANDS[args.cmd][0]
    try:
        payload, text, code = fn(args)
    except wd.WordSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    fmt = args.format or ("dot" if args.cmd == "orbit-graph" else "json")
    if fmt == "dot" and args.cmd != "orbit-graph":
        print("error: --format dot is only available for orbit-graph", file=sys.stderr)
        return 2
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
