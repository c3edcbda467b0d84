"""Tokenizer for .qid identity files."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from ..errors import QSeriesError


class DSLError(QSeriesError):
    """Error tied to a source position (1-based line and column)."""

    def __init__(self, message: str, position: Tuple[int, int] = None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{position[0]}:{position[1]}: {message}"
        super().__init__(message)


class DSLSyntaxError(DSLError):
    pass


class DSLEvalError(DSLError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: Tuple[int, int]

    @property
    def end_column(self) -> int:
        return self.position[1] + len(self.lexeme)


SINGLE = {
    "^": "CARET", "/": "SLASH", "*": "STAR", "+": "PLUS", "-": "MINUS",
    "(": "LPAREN", ")": "RPAREN", ",": "COMMA", ";": "SEMI",
}
DIRECTIVES = ("order", "scale", "label")


def tokenize(src: str) -> List[Token]:
    tokens = []
    line, col, i = 1, 1, 0
    n = len(src)
    while i < n:
        ch = src[i]
        pos = (line, col)
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            end = src.find("\n", i)
            end = n if end == -1 else end
            text = src[i:end]
            word = text[1:].split(None, 1)[0] if text[1:].strip() else ""
            if word in DIRECTIVES and text[1:].startswith(word):
                tokens.append(Token("DIRECTIVE", "#" + word, pos))
                rest_start = i + 1 + len(word)
                if word == "label":
                    label = src[rest_start:end]
                    stripped = label.strip()
                    if stripped:
                        offset = label.index(stripped)
                        tokens.append(Token("LABEL", stripped, (line, col + 1 + len(word) + offset)))
                    col += end - i
                    i = end
                else:
                    col += rest_start - i
                    i = rest_start
                continue
            col += end - i
            i = end
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(Token("INT", src[i:j], pos))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            word = src[i:j]
            tokens.append(Token("Q" if word == "q" else "IDENT", word, pos))
            col += j - i
            i = j
            continue
        if src.startswith("==", i):
            tokens.append(Token("EQEQ", "==", pos))
            i, col = i + 2, col + 2
            continue
        if ch in SINGLE:
            tokens.append(Token(SINGLE[ch], ch, pos))
            i, col = i + 1, col + 1
            continue
        raise DSLSyntaxError(f"unexpected character {ch!r}", pos)
    return tokens
