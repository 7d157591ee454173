"""Command-line front end: insertion, reversal, bijections, enumeration,
polynomials, step traces, and the verification harness."""

from __future__ import annotations

import argparse
import json
import sys

from .alphabet import Alphabet, kl_shuffle, parse_shuffle, shuffle_to_json
from .bijection import change_shuffle, reverse_word, standardize_t, standardize_u
from .insertion import (
    REGULAR_REGULAR,
    insert_word,
    parse_variant,
    parse_word,
)
from .schur import enumerate_ssyt, hook_schur
from .polynomial import polynomial_to_json
from .tableau import (
    check_shape,
    recording_from_json,
    recording_to_json,
    render_recording,
    render_tableau,
    tableau_from_json,
    tableau_to_json,
)
from .verify import (
    Sample,
    align_traces,
    check_counting_identity,
    check_dual_regular_agreement_grid,
    check_hook_schur_invariance,
    check_restriction_subtableau_grid,
    check_shape_invariance,
    check_trace_alignment_grid,
    check_weight_preserving_bijection_grid,
)

# registry of verifiable claims exposed via --theorem
_CLAIMS = (
    "2",          # shape invariance, regular-regular
    "5",          # shape invariance, chosen variant
    "cor4",       # hook Schur polynomial ignores the shuffle
    "lemma2.6",   # restriction to a down-set inserts to a subtableau
    "lemma2.15",  # adjacent-shuffle traces align step by step
    "lemma3.2",   # distinct u-letters: regular and dual u-rules agree
    "theorem3",   # shuffle change is a content-preserving bijection
    "identity",   # counting identity against (k+l)^n
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superrsk",
        description="Shuffle-parameterized super-RSK insertion toolkit",
    )
    parser.add_argument("--k", type=int, default=None, help="number of t-letters")
    parser.add_argument("--l", type=int, default=None, help="number of u-letters")
    parser.add_argument("--shuffle", default=None, help='order chain, e.g. "t1<u1<t2"')
    parser.add_argument(
        "--variant",
        default="reg-reg",
        choices=["reg-reg", "reg-dual", "dual-reg", "dual-dual"],
    )
    parser.add_argument("--format", default="text", choices=["text", "json"])

    sub = parser.add_subparsers(dest="command", required=True)

    p_insert = sub.add_parser("insert", help="insert a word; print P, Q, path lengths")
    p_insert.add_argument("--word", required=True)

    p_reverse = sub.add_parser("reverse", help="recover the word from P,Q JSON")
    p_reverse.add_argument("--in", dest="infile", default=None, help="JSON file (default stdin)")

    p_phi = sub.add_parser("phi", help="transport P across a shuffle change, Q fixed")
    p_phi.add_argument("--in", dest="infile", default=None, help="JSON file (default stdin)")
    p_phi.add_argument("--shuffle-b", required=True, help="target order chain")

    p_std = sub.add_parser("standardize", help="relabel repeated letters distinctly")
    p_std.add_argument("--word", required=True)
    p_std.add_argument("--side", default="u", choices=["u", "t"])

    p_enum = sub.add_parser("enumerate", help="list all valid fillings of a shape")
    p_enum.add_argument("--shape", required=True, help='row lengths, e.g. "3,1"')

    p_hs = sub.add_parser("hook-schur", help="weight generating polynomial of a shape")
    p_hs.add_argument("--shape", required=True)

    p_verify = sub.add_parser("verify", help="run a claim checker; nonzero exit on failure")
    p_verify.add_argument("--theorem", required=True, choices=list(_CLAIMS))
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--mode", default="exhaustive", choices=["exhaustive", "sample"])
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None)

    p_trace = sub.add_parser("trace", help="align the step traces of two adjacent orders")
    p_trace.add_argument("--word", required=True)
    p_trace.add_argument("--shuffle-b", required=True)

    return parser


def _alphabet(args) -> Alphabet:
    if args.k is None or args.l is None:
        raise ValueError("--k and --l are required for this command")
    return Alphabet(args.k, args.l)


def _shuffle(args, alphabet: Alphabet):
    if args.shuffle is None:
        return kl_shuffle(alphabet)
    return parse_shuffle(args.shuffle, alphabet)


def _read_pq(args):
    if args.infile is None:
        data = json.load(sys.stdin)
    else:
        with open(args.infile, encoding="utf-8") as handle:
            data = json.load(handle)
    return tableau_from_json(data["p"]), recording_from_json(data["q"])


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if text and not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_insert(args) -> int:
    alphabet = _alphabet(args)
    shuffle = _shuffle(args, alphabet)
    variant = parse_variant(args.variant)
    word = parse_word(args.word, alphabet)
    result = insert_word(word, shuffle, variant)
    if args.format == "json":
        _emit_json(
            {
                "p": tableau_to_json(result.p),
                "q": recording_to_json(result.q),
                "path_lengths": list(result.trace.path_lengths),
            }
        )
    else:
        lengths = " ".join(str(x) for x in result.trace.path_lengths)
        parts = ["P:", render_tableau(result.p), "Q:", render_recording(result.q),
                 f"path lengths: {lengths}"]
        _emit("\n".join(part for part in parts if part != ""))
    return 0


def _cmd_reverse(args) -> int:
    alphabet = _alphabet(args)
    shuffle = _shuffle(args, alphabet)
    variant = parse_variant(args.variant)
    p, q = _read_pq(args)
    word = reverse_word(p, q, shuffle, variant)
    if args.format == "json":
        _emit_json({"word": [letter.name for letter in word]})
    else:
        _emit(str(word))
    return 0


def _cmd_phi(args) -> int:
    alphabet = _alphabet(args)
    source = _shuffle(args, alphabet)
    target = parse_shuffle(args.shuffle_b, alphabet)
    variant = parse_variant(args.variant)
    p, q = _read_pq(args)
    image = change_shuffle(p, q, source, target, variant)
    if args.format == "json":
        _emit_json({"p": tableau_to_json(image)})
    else:
        _emit(render_tableau(image))
    return 0


def _cmd_standardize(args) -> int:
    alphabet = _alphabet(args)
    shuffle = _shuffle(args, alphabet)
    word = parse_word(args.word, alphabet)
    std = standardize_u(word, shuffle) if args.side == "u" else standardize_t(word, shuffle)
    if args.format == "json":
        _emit_json(
            {
                "word": [letter.name for letter in std.word],
                "shuffle": shuffle_to_json(std.shuffle),
                "letter_map": {str(i): x.name for i, x in enumerate(std.letter_map, 1)},
            }
        )
    else:
        mapping = " ".join(f"{i}:{x.name}" for i, x in enumerate(std.letter_map, 1))
        _emit(f"w: {std.word}\nshuffle: {std.shuffle}\nmap: {mapping}")
    return 0


def _cmd_enumerate(args) -> int:
    alphabet = _alphabet(args)
    shuffle = _shuffle(args, alphabet)
    variant = parse_variant(args.variant)
    shape = check_shape(int(x) for x in args.shape.split(",") if x.strip())
    tableaux = enumerate_ssyt(shape, alphabet, shuffle, variant)
    if args.format == "json":
        _emit_json({"count": len(tableaux), "tableaux": [tableau_to_json(t) for t in tableaux]})
    else:
        blocks = [f"count: {len(tableaux)}"] + [render_tableau(t) for t in tableaux]
        _emit("\n\n".join(blocks))
    return 0


def _cmd_hook_schur(args) -> int:
    alphabet = _alphabet(args)
    shuffle = _shuffle(args, alphabet)
    shape = check_shape(int(x) for x in args.shape.split(",") if x.strip())
    poly = hook_schur(shape, alphabet, shuffle)
    if args.format == "json":
        _emit_json(polynomial_to_json(poly))
    else:
        _emit(poly.render())
    return 0


def _cmd_verify(args) -> int:
    alphabet = _alphabet(args)
    variant = parse_variant(args.variant)
    mode = "exhaustive" if args.mode == "exhaustive" else Sample(args.samples, args.seed)
    claim = args.theorem
    if claim == "2":
        report = check_shape_invariance(alphabet, args.n, REGULAR_REGULAR, mode)
    elif claim == "5":
        report = check_shape_invariance(alphabet, args.n, variant, mode)
    elif claim == "cor4":
        report = check_hook_schur_invariance(alphabet, args.n)
    elif claim == "lemma2.6":
        report = check_restriction_subtableau_grid(alphabet, args.n, mode)
    elif claim == "lemma2.15":
        report = check_trace_alignment_grid(alphabet, args.n, mode)
    elif claim == "lemma3.2":
        report = check_dual_regular_agreement_grid(alphabet, args.n, mode)
    elif claim == "theorem3":
        report = check_weight_preserving_bijection_grid(alphabet, args.n)
    else:
        report = check_counting_identity(alphabet, args.n)

    payload = report.to_json_dict()
    rendered = json.dumps(payload, indent=2, sort_keys=True)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
    if args.format == "json":
        _emit(rendered)
    else:
        status = "ok" if report.passed else "FAILED"
        _emit(
            f"check: {report.check_name}\ncases: {report.cases_run}\n"
            f"failures: {len(report.failures)}\nstatus: {status}"
        )
    return 0 if report.passed else 1


def _cmd_trace(args) -> int:
    alphabet = _alphabet(args)
    shuffle_a = _shuffle(args, alphabet)
    shuffle_b = parse_shuffle(args.shuffle_b, alphabet)
    word = parse_word(args.word, alphabet)
    trace_a = insert_word(word, shuffle_a, REGULAR_REGULAR).trace
    trace_b = insert_word(word, shuffle_b, REGULAR_REGULAR).trace
    alignment = align_traces(trace_a, shuffle_a, trace_b, shuffle_b)
    if args.format == "json":
        _emit_json(
            {
                "s_a": trace_a.total,
                "s_b": trace_b.total,
                "alignment": [list(pq) for pq in alignment.pairs],
                "equivalent": [True] * len(alignment.pairs),
                "witnesses": alignment.witness_count,
            }
        )
    else:
        lines = [f"s_a: {trace_a.total}", f"s_b: {trace_b.total}"]
        lines.append("alignment: " + " -> ".join(f"({p},{q})" for p, q in alignment.pairs))
        for p, q in alignment.pairs:
            lines.append(f"step {p} ~ step {q}: equivalent")
            lines.append("a:")
            lines.append(render_tableau(trace_a.state_after(p)))
            lines.append("b:")
            lines.append(render_tableau(trace_b.state_after(q)))
        lines.append(f"witnesses: {alignment.witness_count}")
        _emit("\n".join(lines))
    return 0


_HANDLERS = {
    "insert": _cmd_insert,
    "reverse": _cmd_reverse,
    "phi": _cmd_phi,
    "standardize": _cmd_standardize,
    "enumerate": _cmd_enumerate,
    "hook-schur": _cmd_hook_schur,
    "verify": _cmd_verify,
    "trace": _cmd_trace,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"run 'superrsk {args.command} --help' for usage", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
