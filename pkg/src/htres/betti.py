"""Multigraded Betti tables."""
from __future__ import annotations

from collections import Counter

from .monomials import Monomial


class BettiTable:
    """Map (homological degree i, multidegree b) -> beta_{i,b}. Zeros are not stored."""

    def __init__(self, n, entries=None):
        self.n = n
        self.entries = Counter()
        for (i, b), v in (entries or {}).items():
            self.add(i, b, v)

    def add(self, i, b: Monomial, v=1):
        if v < 0:
            raise ValueError("Betti numbers are non-negative")
        if v:
            self.entries[(i, b)] += v

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and +self.entries == +other.entries

    def totals(self):
        """(beta_0, beta_1, ...) summed over multidegrees."""
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return tuple(out)

    def graded(self):
        """Counter keyed by (i, total degree)."""
        out = Counter()
        for (i, b), v in self.entries.items():
            out[(i, b.degree)] += v
        return out

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))

    def to_json(self):
        return {"entries": [{"i": i, "deg": list(b.exps), "beta": v}
                            for (i, b), v in self.sorted_items()]}

    @classmethod
    def from_json(cls, doc, n=None):
        rows = doc["entries"]
        if n is None:
            n = len(rows[0]["deg"]) if rows else 0
        t = cls(n)
        for e in rows:
            t.add(int(e["i"]), Monomial(tuple(e["deg"])), int(e["beta"]))
        return t

    def render(self):
        """Aligned text: one row per homological degree, one column per total degree."""
        graded = self.graded()
        if not graded:
            return "(empty)"
        rows = sorted({i for i, _ in graded})
        cols = sorted({d for _, d in graded})
        cells = [[str(graded[(i, d)]) if graded[(i, d)] else "." for d in cols] for i in rows]
        width = max(len(str(c)) for c in cols + [x for row in cells for x in row])
        head = "i\\deg " + " ".join(str(c).rjust(width) for c in cols)
        lines = [head]
        for i, row in zip(rows, cells):
            lines.append(f"{i:>5} " + " ".join(x.rjust(width) for x in row))
        lines.append("total " + " ".join(str(t) for t in self.totals()))
        return "\n".join(lines)

    def __repr__(self):
        return f"BettiTable(totals={self.totals()})"
