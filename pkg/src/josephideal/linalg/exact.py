"""Exact sparse linear algebra over the rationals.

Rows are dicts ``{column: value}``. Elimination is fraction-free: every stored row
has coprime integer entries, a reduction step is ``p·row − c·pivot_row`` followed by
division by the content, so no Fraction appears until back-substitution.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping

SparseRow = Dict[int, int]


def integral_row(row: Mapping[int, Fraction]) -> SparseRow:
    """Clear denominators and divide by the content; the first entry is made positive."""
    entries = {c: Fraction(v) for c, v in row.items() if v}
    if not entries:
        return {}
    scale = 1
    for v in entries.values():
        scale = lcm(scale, v.denominator)
    ints = {c: int(v * scale) for c, v in entries.items()}
    return _normalize(ints)


def _normalize(row: SparseRow) -> SparseRow:
    if not row:
        return row
    content = 0
    for v in row.values():
        content = gcd(content, v)
    lead = row[min(row)]
    if lead < 0:
        content = -content
    if content != 1:
        row = {c: v // content for c, v in row.items()}
    return row


class SparseEchelon:
    """Incrementally built row-echelon form of a span of sparse rows."""

    def __init__(self):
        self.pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> SparseRow:
        """Remainder of ``row`` after eliminating every pivot column it meets."""
        work = integral_row(row)
        pivots = self.pivots
        while work:
            hits = [c for c in work if c in pivots]
            if not hits:
                break
            c = min(hits)
            prow = pivots[c]
            p, f = prow[c], work[c]
            g = gcd(p, f)
            p, f = p // g, f // g
            out = {k: p * v for k, v in work.items()}
            for k, v in prow.items():
                nv = out.get(k, 0) - f * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            work = _normalize(out)
        return work

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert ``row``; returns False when it was already in the span."""
        rest = self.reduce(row)
        if not rest:
            return False
        col = min(rest)
        self.pivots[col] = rest
        return True

    def extend(self, rows: Iterable[Mapping[int, Fraction]]) -> int:
        added = 0
        for row in rows:
            if self.add(row):
                added += 1
        return added

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)

    def nullspace(self, ncols: int) -> List[Dict[int, Fraction]]:
        """Basis of {x : row·x = 0 for every stored row}, one vector per free column."""
        order = self._back_order()
        free = [c for c in range(ncols) if c not in self.pivots]
        basis = []
        for f in free:
            x: Dict[int, Fraction] = {f: Fraction(1)}
            for col in order:
                prow = self.pivots[col]
                s = Fraction(0)
                for k, v in prow.items():
                    if k != col and k in x:
                        s += v * x[k]
                if s:
                    x[col] = -s / prow[col]
            basis.append(x)
        return basis

    def _back_order(self) -> List[int]:
        """Pivot columns ordered so that every row is solved after the pivots it mentions."""
        # a row may mention pivots added after it, never earlier ones
        deps = {
            col: [k for k in row if k != col and k in self.pivots]
            for col, row in self.pivots.items()
        }
        order: List[int] = []
        state: Dict[int, int] = {}
        for start in sorted(self.pivots):
            if state.get(start):
                continue
            stack = [(start, iter(deps[start]))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    stack.pop()
                    state[node] = 2
                    order.append(node)
                elif not state.get(nxt):
                    state[nxt] = 1
                    stack.append((nxt, iter(deps[nxt])))
        return order


def rank(rows: Iterable[Mapping[int, Fraction]]) -> int:
    echelon = SparseEchelon()
    echelon.extend(rows)
    return echelon.rank
