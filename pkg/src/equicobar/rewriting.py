"""Bounded Knuth-Bendix completion for monoid presentations (shortlex order)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Inconclusive

MAX_RULES = 400
MAX_RULE_LENGTH = 40
MAX_PASSES = 60


class RewritingSystem:
    def __init__(self, letters, rules=()):
        self.letters = list(letters)
        self.rank = {x: i for i, x in enumerate(self.letters)}
        self.rules = {}
        for l, r in rules:
            self.add(l, r)

    def key(self, w):
        return (len(w), [self.rank[x] for x in w])

    def orient(self, u, v):
        if u == v:
            return None
        return (u, v) if self.key(u) > self.key(v) else (v, u)

    def add(self, u, v):
        rule = self.orient(tuple(u), tuple(v))
        if rule is None:
            return False
        l, r = rule
        if l in self.rules:
            if self.rules[l] == r:
                return False
            other = self.rules[l]
            if self.key(r) < self.key(other):
                self.rules[l] = r
                return self.add(other, r) or True
            return self.add(r, other)
        self.rules[l] = r
        return True

    def reduce(self, w):
        w = tuple(w)
        changed = True
        while changed:
            changed = False
            for l, r in self.rules.items():
                n = len(l)
                for i in range(len(w) - n + 1):
                    if w[i:i + n] == l:
                        w = w[:i] + r + w[i + n:]
                        changed = True
                        break
                if changed:
                    break
        return w

    def is_irreducible(self, w):
        for l in self.rules:
            n = len(l)
            for i in range(len(w) - n + 1):
                if w[i:i + n] == l:
                    return False
        return True

    def interreduce(self):
        changed = True
        while changed:
            changed = False
            for l in list(self.rules):
                r = self.rules.pop(l)
                l2, r2 = self.reduce(l), self.reduce(r)
                if (l2, r2) != (l, r):
                    changed = True
                    self.add(l2, r2)
                else:
                    self.rules[l] = r

    def critical_pairs(self):
        items = list(self.rules.items())
        for l1, r1 in items:
            for l2, r2 in items:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        yield r1 + l2[k:], l1[:-k] + r2
                if len(l2) < len(l1) or (len(l2) == len(l1) and l2 != l1):
                    for i in range(len(l1) - len(l2) + 1):
                        if l1[i:i + len(l2)] == l2:
                            yield r1, l1[:i] + r2 + l1[i + len(l2):]

    def complete(self, max_rules=MAX_RULES, max_len=MAX_RULE_LENGTH, max_passes=MAX_PASSES):
        """Run completion; raises :class:`Inconclusive` when a bound is hit."""
        for _ in range(max_passes):
            self.interreduce()
            new = False
            for u, v in list(self.critical_pairs()):
                a, b = self.reduce(u), self.reduce(v)
                if a != b:
                    self.add(a, b)
                    new = True
                    if len(self.rules) > max_rules:
                        raise Inconclusive(f"completion exceeded {max_rules} rules", cap="rewrite rules")
                    if max(len(l) for l in self.rules) > max_len:
                        raise Inconclusive(f"completion produced a rule longer than {max_len}", cap="rule length")
            if not new:
                self.interreduce()
                return self
        raise Inconclusive(f"completion did not converge within {max_passes} passes", cap="completion passes")

    def normal_forms(self, max_len):
        """Irreducible words by length; ``None`` if some have length ``max_len`` (set maybe infinite)."""
        level = [()]
        out = [()]
        for _ in range(max_len):
            nxt = []
            for w in level:
                for x in self.letters:
                    v = w + (x,)
                    if self.is_irreducible(v):
                        nxt.append(v)
            if not nxt:
                return out
            out.extend(nxt)
            level = nxt
        return None

    def count_by_length(self, max_len):
        counts = [1]
        level = [()]
        for _ in range(max_len):
            level = [w + (x,) for w in level for x in self.letters if self.is_irreducible(w + (x,))]
            counts.append(len(level))
        return counts


def completed_system(P, **bounds):
    system = RewritingSystem(P.letters(), P.relations)
    return system.complete(**bounds)


@dataclass
class RewriteResult:
    status: str
    word: tuple = ()
    reason: str = ""

    @property
    def conclusive(self):
        return self.status == "normal"


def word_problem_normalize(P, w, **bounds):
    """Normal form of ``w`` in the monoid presented by ``P``, or an inconclusive result."""
    try:
        system = completed_system(P, **bounds)
    except Inconclusive as exc:
        return RewriteResult("inconclusive", tuple(w), str(exc))
    return RewriteResult("normal", system.reduce(w))


@dataclass
class MonoidAlgebra:
    """Finite monoid algebra from a complete rewriting system."""

    elements: list
    table: list

    @property
    def dim(self):
        return len(self.elements)


def finite_monoid_algebra(P, max_len=12, **bounds):
    """Basis of normal forms and multiplication table, or raise :class:`Inconclusive`."""
    system = completed_system(P, **bounds)
    nfs = system.normal_forms(max_len)
    if nfs is None:
        raise Inconclusive(f"irreducible words persist to length {max_len}", cap="normal-form length")
    index = {w: i for i, w in enumerate(nfs)}
    table = [[index[system.reduce(a + b)] for b in nfs] for a in nfs]
    return MonoidAlgebra(nfs, table)
