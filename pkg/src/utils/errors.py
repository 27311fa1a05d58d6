'''Error types shared across the toolkit.

Every error is a ValueError so callers that only care about bad input can
catch one type; the CLI maps SizeBoundExceeded to its own exit code.
'''


class GraphFormatError(ValueError):
    '''A text document (graph, poset, decomposition, antichain) failed to parse.'''

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f'line {line}, column {column}: {message}')


class SizeBoundExceeded(ValueError):
    '''An instance is larger than the configured search or oracle bound.'''

    def __init__(self, what: str, size: int, bound: int):
        self.size = size
        self.bound = bound
        super().__init__(f'{what} is {size}, above the bound of {bound}')


class MalformedModelError(ValueError):
    '''A model's domain or branch sets do not match the graphs it is checked against.'''


class NotTwoConnectedError(ValueError):
    '''The input graph is not 2-connected.'''


class InvalidAntichainError(ValueError):
    '''A symbolic family is not an antichain under contraction.'''
