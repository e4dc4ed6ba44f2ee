"""Halstead token counts and measures for C-family sources.

A lexer is enough for Halstead: tokens are classified as operators
(keywords, punctuation, operator spellings, bracket pairs) or operands
(identifiers, numeric literals, string and character literals). No grammar
parse is attempted, which keeps the extractor usable on partial or
unpreprocessed sources.

Counting conventions:
  - comments contribute nothing, and neither do preprocessor directives
    (skipped whole-line, include paths would otherwise dominate operands);
  - a string or character literal is a single operand, quotes included;
  - paired brackets ``()``, ``[]``, ``{}`` count as one operator occurrence
    per pair, under one spelling per pair kind.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .dataset import Record
from .errors import AnalysisError, InputError

OPERATOR = "operator"
OPERAND = "operand"

KEYWORDS = frozenset("""
    alignas alignof and and_eq asm auto bitand bitor bool break case catch
    char char16_t char32_t class compl const const_cast constexpr continue
    decltype default delete do double dynamic_cast else enum explicit
    export extern false float for friend goto if inline int long mutable
    namespace new noexcept not not_eq nullptr operator or or_eq private
    protected public register reinterpret_cast restrict return short
    signed sizeof static static_assert static_cast struct switch template
    this thread_local throw true try typedef typeid typename union
    unsigned using virtual void volatile wchar_t while xor xor_eq
""".split())

# longest spellings first so startswith() takes the maximal munch
_PUNCTUATION = (
    "<<=", ">>=", "->*", "...",
    "::", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&", "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", ".*",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "&", "|", "^",
    "?", ":", ";", ",", ".",
    "(", ")", "[", "]", "{", "}",
)

_BRACKET_PAIRS = (("(", ")", "()"), ("[", "]", "[]"), ("{", "}", "{}"))

HALSTEAD_METRICS = (
    "halstead_n1",
    "halstead_n2",
    "halstead_N1",
    "halstead_N2",
    "halstead_volume",
    "halstead_difficulty",
    "halstead_effort",
)


class Token(NamedTuple):
    kind: str  # OPERATOR or OPERAND
    text: str
    line: int


@dataclass(frozen=True)
class TokenCounts:
    """Primitive Halstead counts: distinct (n) and total (N) spellings."""

    n1: int  # distinct operators
    n2: int  # distinct operands
    N1: int  # total operators
    N2: int  # total operands


@dataclass(frozen=True)
class HalsteadMeasures:
    vocabulary: int  # n1 + n2
    length: int  # N1 + N2
    volume: float  # length * log2(vocabulary)
    difficulty: float  # (n1 / 2) * (N2 / n2)
    effort: float  # difficulty * volume, the "mental effort"


def tokenize(source: str) -> list[Token]:
    """Classified token stream for one source file.

    Whitespace, comments, and preprocessor directives (including their
    backslash continuations) are consumed silently; everything else comes
    back as an operator or operand token. Raises InputError for an
    unterminated block comment or string/character literal, naming the
    line it starts on. Unknown characters become single-character
    operators rather than errors, so partial sources still tokenize.
    """
    tokens: list[Token] = []
    i = 0
    line = 1
    n = len(source)
    at_line_start = True
    while i < n:
        c = source[i]
        if c == "\n":
            line += 1
            i += 1
            at_line_start = True
            continue
        if c in " \t\r\v\f":
            i += 1
            continue
        if c == "/" and i + 1 < n and source[i + 1] == "/":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if c == "/" and i + 1 < n and source[i + 1] == "*":
            end = source.find("*/", i + 2)
            if end < 0:
                raise InputError(f"line {line}: unterminated block comment")
            line += source.count("\n", i, end)
            i = end + 2
            # comments act as whitespace: they do not clear at_line_start
            continue
        if c == "#" and at_line_start:
            while True:
                while i < n and source[i] != "\n":
                    i += 1
                if i >= n:
                    break
                j = i - 1
                if j >= 0 and source[j] == "\r":
                    j -= 1
                if j >= 0 and source[j] == "\\":
                    line += 1
                    i += 1  # backslash continuation: directive spans this newline
                    continue
                break
            continue
        if c == '"' or c == "'":
            start_line = line
            j = i + 1
            terminated = False
            while j < n:
                ch = source[j]
                if ch == "\\":
                    if j + 1 < n and source[j + 1] == "\n":
                        line += 1
                    j += 2
                    continue
                if ch == "\n":
                    break
                if ch == c:
                    terminated = True
                    break
                j += 1
            if not terminated:
                what = "string" if c == '"' else "character"
                raise InputError(f"line {start_line}: unterminated {what} literal")
            tokens.append(Token(OPERAND, source[i : j + 1], start_line))
            i = j + 1
            at_line_start = False
            continue
        if c.isalpha() or c == "_":
            j = i + 1
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            text = source[i:j]
            tokens.append(Token(OPERATOR if text in KEYWORDS else OPERAND, text, line))
            i = j
            at_line_start = False
            continue
        if c.isdigit() or (c == "." and i + 1 < n and source[i + 1].isdigit()):
            # pp-number: digits, identifier chars, dots, signed exponents
            j = i + 1
            while j < n:
                ch = source[j]
                if ch in "eEpP" and j + 1 < n and source[j + 1] in "+-":
                    j += 2
                    continue
                if ch.isalnum() or ch in "._":
                    j += 1
                    continue
                break
            tokens.append(Token(OPERAND, source[i:j], line))
            i = j
            at_line_start = False
            continue
        for op in _PUNCTUATION:
            if source.startswith(op, i):
                tokens.append(Token(OPERATOR, op, line))
                i += len(op)
                break
        else:
            tokens.append(Token(OPERATOR, c, line))
            i += 1
        at_line_start = False
    return tokens


def halstead_counts(tokens: Iterable[Token]) -> TokenCounts:
    """Distinct and total operator/operand counts over a token stream.

    Each balanced bracket pair contributes one operator occurrence; an
    unbalanced surplus still counts one occurrence per leftover bracket.
    """
    operators: Counter[str] = Counter()
    operands: Counter[str] = Counter()
    for tok in tokens:
        if tok.kind == OPERAND:
            operands[tok.text] += 1
        else:
            operators[tok.text] += 1
    for open_b, close_b, spelling in _BRACKET_PAIRS:
        pairs = max(operators.pop(open_b, 0), operators.pop(close_b, 0))
        if pairs:
            operators[spelling] += pairs
    return TokenCounts(
        n1=len(operators),
        n2=len(operands),
        N1=sum(operators.values()),
        N2=sum(operands.values()),
    )


def halstead_measures(counts: TokenCounts) -> HalsteadMeasures:
    """Classical measures from the counts: V = N log2(n), D = (n1/2)(N2/n2), E = DV."""
    vocabulary = counts.n1 + counts.n2
    length = counts.N1 + counts.N2
    if counts.n2 == 0 or vocabulary == 0:
        raise AnalysisError("degenerate counts: no operands")
    volume = length * math.log2(vocabulary)
    difficulty = (counts.n1 / 2.0) * (counts.N2 / counts.n2)
    return HalsteadMeasures(
        vocabulary=vocabulary,
        length=length,
        volume=volume,
        difficulty=difficulty,
        effort=difficulty * volume,
    )


def extract_file(source_text: str, version: str, package: str, entity: str) -> list[Record]:
    """Dataset records for one source file, keyed (version, package, entity).

    Emits one record per Halstead metric; errors are annotated with the
    entity so callers can report which file failed.
    """
    try:
        counts = halstead_counts(tokenize(source_text))
        measures = halstead_measures(counts)
    except (AnalysisError, InputError) as exc:
        raise type(exc)(f"{entity}: {exc}") from exc
    values = {
        "halstead_n1": float(counts.n1),
        "halstead_n2": float(counts.n2),
        "halstead_N1": float(counts.N1),
        "halstead_N2": float(counts.N2),
        "halstead_volume": measures.volume,
        "halstead_difficulty": measures.difficulty,
        "halstead_effort": measures.effort,
    }
    return [Record(version, package, entity, metric, value) for metric, value in values.items()]
