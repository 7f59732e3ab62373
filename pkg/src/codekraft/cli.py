"""Command-line front end: code files, command dispatch, reports, DOT export.

Exit codes: 0 = property holds / success, 1 = property fails (not UD, not
a refinement, failed verification), 2 = usage or input error, 3 =
resource limit.  All behavior is flag-driven; there are no configuration
files or environment variables.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import IO, Sequence

from .core import Alphabet, Code, Factorization, Word, parse_word
from .decipher import DEFAULT_MAX_STATES, is_ud
from .errors import (
    ChainViolationError,
    CodeFileError,
    EmptyCodeError,
    EmptyWordError,
    MissingAlphabetError,
    MixedAlphabetsError,
    NotRefinementError,
    ResourceLimitError,
    UnknownSymbolError,
)
from .kraft import approx_str, exact_str, kraft_sum
from .power import DEFAULT_MAX_POWER_WORDS, code_power, power_chain
from .props import (
    check_chain,
    check_equal_kraft_finiteness,
    check_mcmillan,
    check_monotonicity,
    check_power_law,
    PropositionId,
    PropositionReport,
)
from .refine import DEFAULT_MAX_CANDIDATES, irredundant_refinements, is_refinement


@dataclass(frozen=True)
class CodeFile:
    """A parsed code file: where it came from, its alphabet, its code."""

    path: str | None
    alphabet: Alphabet
    code: Code
    warnings: tuple[str, ...] = ()


def parse_code_file(text: str | bytes, path: str | None = None) -> CodeFile:
    """Parse the one-word-per-line code file format.

    Lines starting with ``#`` and blank lines are ignored.  The first
    significant line must be ``alphabet <symbols>`` with pairwise distinct
    non-whitespace characters; every later significant line is one word
    over those symbols.  Duplicate words collapse with a warning.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    alphabet: Alphabet | None = None
    words: list[Word] = []
    warnings: list[str] = []
    seen: set[Word] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "alphabet":
                raise MissingAlphabetError(
                    "expected 'alphabet <symbols>' as the first significant line", line=lineno
                )
            try:
                alphabet = Alphabet(parts[1])
            except ValueError as exc:
                raise CodeFileError(str(exc), line=lineno) from exc
            continue
        if len(line.split()) != 1:
            raise CodeFileError(f"expected one word per line, got {line!r}", line=lineno)
        try:
            word = parse_word(line, alphabet)
        except UnknownSymbolError as exc:
            raise UnknownSymbolError(exc.symbol, line=lineno) from exc
        if word in seen:
            warnings.append(f"line {lineno}: duplicate word {line!r}")
            continue
        seen.add(word)
        words.append(word)
    if alphabet is None:
        raise MissingAlphabetError("code file declares no alphabet")
    return CodeFile(path, alphabet, Code(alphabet, words), tuple(warnings))


def emit_code_file(alphabet: Alphabet, code: Code) -> str:
    """Canonical text for a code: alphabet line, then shortlex words."""
    lines = [f"alphabet {alphabet.symbols}"]
    lines.extend(w.text for w in code)
    return "\n".join(lines) + "\n"


def _load(path: str, err: IO[str]) -> CodeFile:
    data = Path(path).read_bytes()
    parsed = parse_code_file(data, path=path)
    for warning in parsed.warnings:
        print(f"warning: {path}: {warning}", file=err)
    return parsed


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, (Word, Factorization)):
        return str(value)
    if isinstance(value, Code):
        return [w.text for w in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _emit(args, out: IO[str], command: str, inputs: list[str], verdict: bool,
          exact_values: dict, witnesses, human_lines: list[str]) -> None:
    if args.json:
        payload = {
            "command": command,
            "inputs": inputs,
            "verdict": verdict,
            "exact_values": _jsonable(exact_values),
            "witnesses": _jsonable(witnesses),
        }
        print(json.dumps(payload, indent=2, ensure_ascii=False), file=out)
    else:
        for line in human_lines:
            print(line, file=out)


def _report_jsonable(report: PropositionReport) -> dict:
    return {
        "id": report.proposition_id.value,
        "passed": report.passed,
        "parameters": {k: _jsonable(v) for k, v in report.parameters},
        "details": {k: _jsonable(v) for k, v in report.details},
    }


def _cmd_kraft(args, out, err) -> int:
    parsed = _load(args.file, err)
    value = kraft_sum(parsed.code)
    _emit(
        args, out, "kraft", [args.file], True,
        {"kraft_sum": value},
        None,
        [f"{exact_str(value)} (≈ {approx_str(value)})"],
    )
    return 0


def _cmd_ud(args, out, err) -> int:
    parsed = _load(args.file, err)
    verdict = is_ud(parsed.code, max_states=args.max_states)
    if verdict.is_ud:
        _emit(args, out, "ud", [args.file], True, {}, None, ["UD"])
        return 0
    left, right = verdict.witness
    word = left.concatenation
    _emit(
        args, out, "ud", [args.file], False,
        {"witness_length": len(word)},
        {"word": word.text, "left": [w.text for w in left.factors], "right": [w.text for w in right.factors]},
        [f"not UD: {word.text} = {left} = {right}"],
    )
    return 1


def _cmd_refines(args, out, err) -> int:
    coarse = _load(args.coarse, err)
    fine = _load(args.fine, err)
    verdict = is_refinement(coarse.code, fine.code)
    if verdict.holds:
        _emit(
            args, out, "refines", [args.coarse, args.fine], True,
            {"kraft_coarse": kraft_sum(coarse.code), "kraft_fine": kraft_sum(fine.code)},
            {word.text: [w.text for w in factorization.factors] for word, factorization in verdict.witnesses},
            [f"{word.text} = {factorization}" for word, factorization in verdict.witnesses],
        )
        return 0
    _emit(
        args, out, "refines", [args.coarse, args.fine], False,
        {},
        {"failing_word": verdict.failing_word.text},
        [f"not a refinement: no factorization of {verdict.failing_word.text}"],
    )
    return 1


def _cmd_irredundant(args, out, err) -> int:
    parsed = _load(args.file, err)
    cap = args.max_tuples if args.max_tuples is not None else DEFAULT_MAX_CANDIDATES
    refinements = irredundant_refinements(parsed.code, max_candidates=cap)
    if args.ud_only:
        refinements = tuple(d for d in refinements if is_ud(d, max_states=args.max_states).is_ud)
    _emit(
        args, out, "irredundant", [args.file], True,
        {"count": len(refinements)},
        {"refinements": [[w.text for w in d] for d in refinements]},
        [str(d) for d in refinements],
    )
    return 0


def _cmd_power(args, out, err) -> int:
    parsed = _load(args.file, err)
    cap = args.max_tuples if args.max_tuples is not None else DEFAULT_MAX_POWER_WORDS
    result = code_power(parsed.code, args.k, max_words=cap)
    text = emit_code_file(parsed.alphabet, result)
    _emit(
        args, out, "power", [args.file], True,
        {"k": args.k, "cardinality": len(result), "kraft_sum": kraft_sum(result)},
        {"words": [w.text for w in result]},
        text.splitlines(),
    )
    return 0


def _cmd_chain(args, out, err) -> int:
    parsed = _load(args.file, err)
    cap = args.max_tuples if args.max_tuples is not None else DEFAULT_MAX_POWER_WORDS
    chain = power_chain(parsed.code, args.n, max_words=cap)
    lines = []
    exact_values: dict[str, object] = {}
    for i, (member, value) in enumerate(zip(chain.members, chain.kraft_values)):
        exponent = 2**i
        lines.append(
            f"C^{exponent}: {len(member)} words, K = {exact_str(value)} (≈ {approx_str(value)})"
        )
        exact_values[f"kraft_2^{i}"] = value
        exact_values[f"cardinality_2^{i}"] = len(member)
    lines.append(f"descending: {'true' if chain.descending else 'false'}")
    lines.append(f"equal Kraft: {'true' if chain.equal_kraft else 'false'}")
    exact_values["descending"] = chain.descending
    exact_values["equal_kraft"] = chain.equal_kraft
    _emit(args, out, "chain", [args.file], True, exact_values, None, lines)
    return 0


def _summarize(report: PropositionReport) -> str:
    verdict = "PASS" if report.passed else "FAIL"
    pid = report.proposition_id
    if pid is PropositionId.MCMILLAN:
        value = report.get("kraft_sum")
        if report.get("status") == "out of hypothesis":
            return f"mcmillan: OUT OF HYPOTHESIS (not UD, K = {exact_str(value)} recorded)"
        return f"mcmillan: {verdict} (UD, K = {exact_str(value)} ≤ 1)"
    if pid is PropositionId.POWER_LAW:
        if report.get("is_ud"):
            return f"power-law: {verdict} (equality at k = 1..{report.get('effective_kmax')})"
        k = report.get("witness_k")
        lhs, rhs = report.get(f"k={k}.kraft_of_power"), report.get(f"k={k}.kraft_pow")
        return f"power-law: {verdict} (strict at k = {k}: {exact_str(lhs)} < {exact_str(rhs)})"
    if pid is PropositionId.MONOTONICITY:
        lhs, rhs = report.get("kraft_coarse"), report.get("kraft_fine")
        relation = "=" if lhs == rhs else "<" if lhs < rhs else ">"
        return (
            f"monotonicity: {verdict} (m = {report.get('cover_exponent_m')}, "
            f"K(C) = {exact_str(lhs)} {relation} K(D) = {exact_str(rhs)})"
        )
    if pid is PropositionId.EQUAL_KRAFT_FINITENESS:
        return f"equal-kraft-finiteness: {verdict} ({report.get('count')} equal-Kraft refinements)"
    if pid is PropositionId.EQUAL_KRAFT_CHAIN:
        value = report.get("kraft_sum")
        rendered = exact_str(value) if value is not None else "-"
        return f"equal-kraft-chain: {verdict} ({report.get('length')} members, all K = {rendered})"
    return f"{pid.value}: {verdict}"


def _cmd_verify(args, out, err) -> int:
    parsed = _load(args.file, err)
    code = parsed.code
    if args.kmax < 2:
        raise ValueError(f"--kmax must be at least 2, got {args.kmax}")
    candidate_cap = args.max_tuples if args.max_tuples is not None else DEFAULT_MAX_CANDIDATES
    power_cap = args.max_tuples if args.max_tuples is not None else DEFAULT_MAX_POWER_WORDS
    reports: list[PropositionReport] = []
    notes: list[str] = []
    reports.append(check_mcmillan(code, kmax=args.kmax))
    reports.append(check_power_law(code, kmax=args.kmax, max_power_words=power_cap))
    ud_flag = is_ud(code, max_states=args.max_states).is_ud
    if not ud_flag:
        notes.append("monotonicity: SKIPPED (code is not uniquely decipherable)")
        notes.append("equal-kraft-finiteness: SKIPPED (code is not uniquely decipherable)")
        notes.append("equal-kraft-chain: SKIPPED (code is not uniquely decipherable)")
    else:
        if len(code):
            unit = Code(parsed.alphabet, (Word(parsed.alphabet, (i,)) for i in range(parsed.alphabet.size)))
            reports.append(check_monotonicity(code, unit, kmax=args.kmax, max_power_words=power_cap))
        else:
            notes.append("monotonicity: SKIPPED (empty code)")
        try:
            reports.append(check_equal_kraft_finiteness(code, max_candidates=candidate_cap))
        except ResourceLimitError as exc:
            notes.append(f"equal-kraft-finiteness: SKIPPED (resource limit: {exc})")
        if len(code):
            depth = 1 if len(code) ** 2 <= power_cap else 0
            chain = power_chain(code, depth, max_words=power_cap)
            if chain.equal_kraft:
                try:
                    reports.append(check_chain(chain.members, max_candidates=candidate_cap))
                except ResourceLimitError as exc:
                    notes.append(f"equal-kraft-chain: SKIPPED (resource limit: {exc})")
            else:
                values = ", ".join(exact_str(v) for v in chain.kraft_values)
                notes.append(f"equal-kraft-chain: SKIPPED (power-chain Kraft values differ: {values})")
        else:
            notes.append("equal-kraft-chain: SKIPPED (empty code)")
    passed = all(r.passed for r in reports)
    lines = [_summarize(r) for r in reports]
    lines.extend(notes)
    lines.append(f"verify: {'PASS' if passed else 'FAIL'}")
    _emit(
        args, out, "verify", [args.file], passed,
        {"kraft_sum": kraft_sum(code), "checks": len(reports)},
        {"reports": [_report_jsonable(r) for r in reports], "notes": notes},
        lines,
    )
    return 0 if passed else 1


def export_hasse(code_files: Sequence[CodeFile]) -> str:
    """DOT text for the covering relations among the given codes.

    Nodes are the input codes in input order, labeled with their name and
    exact Kraft value; an edge C -> D means C is strictly below D in the
    refinement order with no input strictly between.  Output is
    deterministic for identical inputs.
    """
    if not code_files:
        return "digraph refinement {\n}\n"
    alphabet = code_files[0].alphabet
    for parsed in code_files[1:]:
        if parsed.alphabet != alphabet:
            raise MixedAlphabetsError(
                f"codes mix alphabets {alphabet.symbols!r} and {parsed.alphabet.symbols!r}"
            )
    names = _hasse_names(code_files)
    codes = [parsed.code for parsed in code_files]
    n = len(codes)
    below = [[False] * n for _ in range(n)]
    refines_cache: dict[tuple[int, int], bool] = {}

    def leq(i: int, j: int) -> bool:
        if (i, j) not in refines_cache:
            refines_cache[(i, j)] = is_refinement(codes[i], codes[j]).holds
        return refines_cache[(i, j)]

    for i in range(n):
        for j in range(n):
            if i != j and codes[i] != codes[j]:
                below[i][j] = leq(i, j) and not leq(j, i)
    lines = ["digraph refinement {"]
    for i, parsed in enumerate(code_files):
        value = kraft_sum(parsed.code)
        lines.append(f'  "{names[i]}" [label="{names[i]}\\nK = {exact_str(value)}"];')
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                lines.append(f'  "{names[i]}" -> "{names[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_hasse(args, out, err) -> int:
    parsed_files = [_load(path, err) for path in args.files]
    dot = export_hasse(parsed_files)
    edges = [line.strip().rstrip(";") for line in dot.splitlines() if "->" in line]
    _emit(
        args, out, "hasse", list(args.files), True,
        {name: kraft_sum(parsed.code) for name, parsed in zip(_hasse_names(parsed_files), parsed_files)},
        {"dot": dot, "edges": edges},
        dot.splitlines(),
    )
    return 0


def _hasse_names(code_files: Sequence[CodeFile]) -> list[str]:
    names: list[str] = []
    used: set[str] = set()
    for i, parsed in enumerate(code_files):
        stem = Path(parsed.path).stem if parsed.path else f"code{i}"
        name = stem
        suffix = 2
        while name in used:
            name = f"{stem}#{suffix}"
            suffix += 1
        used.add(name)
        names.append(name)
    return names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codekraft",
        description="Exact Kraft sums, unique-decipherability tests, and the refinement order on codes.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object instead of the human report")
    parser.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES, metavar="N",
                        help="cap on dangling-suffix states in the UD test")
    parser.add_argument("--max-tuples", type=int, default=None, metavar="N",
                        help="cap on enumerated tuples/candidates/power words")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kraft", help="exact Kraft sum of a code")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_kraft)

    p = sub.add_parser("ud", help="test unique decipherability")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_ud)

    p = sub.add_parser("refines", help="test whether FINE refines COARSE")
    p.add_argument("coarse")
    p.add_argument("fine")
    p.set_defaults(handler=_cmd_refines)

    p = sub.add_parser("irredundant", help="enumerate irredundant refinements")
    p.add_argument("file")
    p.add_argument("--ud-only", action="store_true", help="keep only uniquely decipherable refinements")
    p.set_defaults(handler=_cmd_irredundant)

    p = sub.add_parser("power", help="compute the k-th power of a code")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True, metavar="K")
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser("chain", help="compute the power chain C, C^2, ..., C^(2^n)")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True, metavar="N")
    p.set_defaults(handler=_cmd_chain)

    p = sub.add_parser("verify", help="run all proposition checks on a code")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=3, metavar="K")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("hasse", help="DOT export of covering relations among codes")
    p.add_argument("files", nargs="+")
    p.set_defaults(handler=_cmd_hasse)

    return parser


def run_command(argv: Sequence[str], stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Run one CLI invocation; returns the exit status.

    Writes the report to ``stdout`` and diagnostics to ``stderr``
    (defaulting to the process streams).
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args, out, err)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=err)
        return 3
    except (ChainViolationError, NotRefinementError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (CodeFileError, UnknownSymbolError, EmptyWordError, MixedAlphabetsError,
            EmptyCodeError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
