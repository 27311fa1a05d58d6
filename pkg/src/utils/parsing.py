'''Line-oriented directive reader shared by the text formats.'''

from collections.abc import Iterator
from dataclasses import dataclass

from src.utils.errors import GraphFormatError


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int

    def error(self, message: str) -> GraphFormatError:
        return GraphFormatError(message, self.line, self.column)

    def as_int(self, what: str) -> int:
        try:
            return int(self.text)
        except ValueError:
            raise self.error(f'{what} must be an integer, got {self.text!r}') from None


def iter_directives(text: str) -> Iterator[list[Token]]:
    '''Yield the whitespace-separated tokens of every non-blank, non-comment line.'''
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith('#'):
            continue
        tokens = []
        position = 0
        for word in raw.split():
            position = raw.index(word, position)
            tokens.append(Token(word, line_no, position + 1))
            position += len(word)
        yield tokens


def expect_arity(tokens: list[Token], count: int) -> None:
    if len(tokens) != count:
        head = tokens[0]
        raise head.error(
            f'{head.text!r} takes {count - 1} argument(s), got {len(tokens) - 1}'
        )
