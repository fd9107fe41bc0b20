"""Monoid and group presentations in a small text grammar.

Grammar: ``<a, b | b = a a, a = a b>``. Letters are separated by spaces;
``x^-1`` is the formal inverse of ``x`` and ``1`` is the empty word.
"""

from __future__ import annotations

import re

from .errors import InputError

INV = "^-1"


def inverse_letter(g):
    return g[: -len(INV)] if g.endswith(INV) else g + INV


def format_word(w):
    return " ".join(w) if w else "1"


def parse_word(text):
    text = text.strip()
    if text in ("", "1"):
        return ()
    return tuple(tok for tok in text.split())


class Presentation:
    """Generators, relations ``(lhs, rhs)`` and optional formal inverses.

    ``inverses`` maps a generator to its inverse letter once localized;
    ``chains_type`` records that the relations came from a simplicial set.
    """

    def __init__(self, generators, relations, inverses=None, chains_type=False):
        self.generators = list(generators)
        self.relations = [(tuple(l), tuple(r)) for l, r in relations]
        self.inverses = dict(inverses or {})
        self.chains_type = chains_type
        letters = set(self.letters())
        for l, r in self.relations:
            for x in l + r:
                if x not in letters:
                    raise InputError(f"relation uses unknown letter {x!r}")

    def letters(self):
        return self.generators + [self.inverses[g] for g in self.generators if g in self.inverses]

    @property
    def marks(self):
        return list(self.generators) if self.chains_type else []

    def localize(self, marks):
        inv = dict(self.inverses)
        rels = list(self.relations)
        for g in marks:
            if g not in self.generators:
                raise InputError(f"cannot invert unknown generator {g!r}")
            if g in inv:
                continue
            gi = inverse_letter(g)
            inv[g] = gi
            rels.append(((g, gi), ()))
            rels.append(((gi, g), ()))
        return Presentation(self.generators, rels, inv, self.chains_type)

    def group_relators(self):
        """Relations as group relators ``l r^-1`` over generators and ``g^-1``."""
        out = []
        for l, r in self.relations:
            w = tuple(l) + tuple(inverse_letter(x) for x in reversed(r))
            out.append(_free_reduce(w))
        return [w for w in out if w]

    def free_product(self, other):
        clash = set(self.generators) & set(other.generators)
        if clash:
            raise InputError(f"generator names clash: {sorted(clash)}")
        return Presentation(
            self.generators + other.generators,
            self.relations + other.relations,
            {**self.inverses, **other.inverses},
            self.chains_type and other.chains_type,
        )

    def rename(self, mapping):
        def m(x):
            if x.endswith(INV):
                return mapping.get(x[: -len(INV)], x[: -len(INV)]) + INV
            return mapping.get(x, x)

        return Presentation(
            [m(g) for g in self.generators],
            [(tuple(map(m, l)), tuple(map(m, r))) for l, r in self.relations],
            {m(g): m(v) for g, v in self.inverses.items()},
            self.chains_type,
        )

    def format(self):
        rels = ", ".join(f"{format_word(l)} = {format_word(r)}" for l, r in self.relations)
        gens = ", ".join(self.letters())
        return f"<{gens} | {rels}>" if rels else f"<{gens} | >"

    __str__ = format

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relations == other.relations
            and self.inverses == other.inverses
        )

    def to_json(self):
        return {
            "schema": 1,
            "generators": self.generators,
            "inverses": dict(sorted(self.inverses.items())),
            "relations": [[list(l), list(r)] for l, r in self.relations],
            "text": self.format(),
        }

    @classmethod
    def parse(cls, text):
        m = re.fullmatch(r"\s*<(.*)\|(.*)>\s*", text)
        if not m:
            raise InputError(f"presentation must look like '<gens | rels>': {text!r}")
        gens_text, rels_text = m.group(1), m.group(2)
        letters = [g.strip() for g in gens_text.split(",") if g.strip()]
        gens = [g for g in letters if not g.endswith(INV)]
        inverses = {inverse_letter(g): g for g in letters if g.endswith(INV)}
        rels = []
        for part in rels_text.split(","):
            if not part.strip():
                continue
            if "=" in part:
                l, r = part.split("=", 1)
            else:
                l, r = part, "1"
            rels.append((parse_word(l), parse_word(r)))
        for l, r in rels:
            for x in l + r:
                if x.endswith(INV) and inverse_letter(x) in gens and inverse_letter(x) not in inverses:
                    inverses[inverse_letter(x)] = x
        return cls(gens, rels, inverses)


def _free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == inverse_letter(x):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


free_reduce = _free_reduce
