from dataclasses import dataclass

from src.graphs.io import serialize_graph
from src.graphs.multigraph import Multigraph


def scaled(trials: int, budget: float) -> int:
    '''Trial count adjusted by the run budget, never below one.'''
    return max(1, round(trials * budget))


@dataclass
class PropertyResult:
    '''Outcome of one property; keeps the first counterexample as MG text.'''

    suite: str
    prop: str
    trials: int = 0
    failures: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, *graphs: Multigraph) -> bool:
        self.trials += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = '\n\n'.join(serialize_graph(g) for g in graphs)
        return ok

    @property
    def passed(self) -> bool:
        return self.failures == 0
