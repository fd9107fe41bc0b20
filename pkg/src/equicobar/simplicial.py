"""Finite simplicial sets stored by nondegenerate simplices.

A simplex of dimension ``n`` is a pair ``(eta, name)``: ``name`` is a
nondegenerate ``k``-simplex and ``eta`` is a monotone surjection
``[n] -> [k]`` written as the tuple ``(eta(0), ..., eta(n))``. By the
Eilenberg-Zilber lemma this pair is unique, so it doubles as the canonical
form. Degeneracy words ``s_{i_r} ... s_{i_1}`` (strictly decreasing indices)
are only used at the JSON boundary; see :func:`word_to_surjection`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .errors import CapExceeded, SimplicialError

BASEPOINT = "*"


def identity_surj(k):
    return tuple(range(k + 1))


def is_surjection(eta):
    if not eta or eta[0] != 0:
        return False
    return all(b - a in (0, 1) for a, b in zip(eta, eta[1:]))


def word_to_surjection(word, k):
    """``s_{j1} s_{j2} ... s_{jr}`` applied to a ``k``-simplex -> surjection.

    ``word`` lists ``j1, j2, ...`` left to right. The codegeneracy of the
    rightmost letter acts first on vertices' images, so the surjection is
    ``sigma_{jr} o ... o sigma_{j1}``.
    """
    word = list(word)
    n = k + len(word)
    eta = []
    for i in range(n + 1):
        v = i
        dim = n
        for j in word:
            if not 0 <= j < dim:
                raise SimplicialError(f"degeneracy index s_{j} invalid in dimension {dim}")
            if v > j:
                v -= 1
            dim -= 1
        eta.append(v)
    return tuple(eta)


def surjection_to_word(eta):
    """Canonical (strictly decreasing) degeneracy word of a surjection."""
    return [i for i in range(len(eta) - 2, -1, -1) if eta[i] == eta[i + 1]]


def canonicalize_word(word, k):
    return surjection_to_word(word_to_surjection(word, k))


def surjections(n, k):
    """All monotone surjections ``[n] -> [k]`` in lexicographic order."""
    out = []
    for jumps in itertools.combinations(range(n), k):
        js = set(jumps)
        eta = [0]
        for i in range(n):
            eta.append(eta[-1] + (1 if i in js else 0))
        out.append(tuple(eta))
    out.sort()
    return out


def format_simplex(simplex):
    eta, name = simplex
    word = surjection_to_word(eta)
    if not word:
        return name
    return "".join(f"s{j}" for j in word) + f"({name})"


def coface(i, n):
    """delta_i : [n-1] -> [n], skipping ``i``."""
    return tuple(j if j < i else j + 1 for j in range(n))


def codegeneracy(i, n):
    """sigma_i : [n+1] -> [n], repeating ``i``."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


class SimplicialSet:
    """A finite simplicial set truncated at ``dim_bound``.

    ``nondeg`` maps each dimension to its list of nondegenerate simplex
    names; ``faces`` maps each name of positive dimension to the tuple of
    its faces ``d_0 .. d_n`` in canonical ``(eta, name)`` form. Names are
    unique across all dimensions.
    """

    def __init__(self, nondeg, faces, dim_bound=None, name=None):
        self.nondeg = {int(n): list(v) for n, v in nondeg.items() if v}
        top = max(self.nondeg) if self.nondeg else 0
        self.dim_bound = top if dim_bound is None else int(dim_bound)
        if self.dim_bound < top:
            raise CapExceeded(f"nondegenerate {top}-simplices exceed dimension bound {self.dim_bound}")
        self.faces = {k: tuple((tuple(e), y) for e, y in v) for k, v in faces.items()}
        self.dim = {}
        for n, names in self.nondeg.items():
            for x in names:
                if x in self.dim:
                    raise SimplicialError(f"duplicate simplex name {x!r}")
                self.dim[x] = n
        self.label = name
        self._op_cache = {}

    # -- basic data ----------------------------------------------------------
    @property
    def top_dim(self):
        return max(self.nondeg) if self.nondeg else -1

    def vertices(self):
        return list(self.nondeg.get(0, []))

    @property
    def reduced(self):
        return len(self.nondeg.get(0, [])) == 1

    @property
    def basepoint(self):
        if not self.reduced:
            raise SimplicialError("simplicial set is not reduced")
        return self.nondeg[0][0]

    def names(self):
        return [x for n in sorted(self.nondeg) for x in self.nondeg[n]]

    def count(self, n):
        return len(self.nondeg.get(n, []))

    def counts(self):
        return [self.count(n) for n in range(self.dim_bound + 1)]

    def with_bound(self, D):
        """Same nondegenerate data with a different dimension bound."""
        return SimplicialSet(self.nondeg, self.faces, D, self.label)

    def nd(self, name):
        return (identity_surj(self.dim[name]), name)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialSet)
            and self.dim_bound == other.dim_bound
            and {n: sorted(v) for n, v in self.nondeg.items()} == {n: sorted(v) for n, v in other.nondeg.items()}
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.dim_bound, tuple(sorted(self.dim.items()))))

    def __repr__(self):
        tag = f" {self.label}" if self.label else ""
        return f"<SimplicialSet{tag} nondeg={self.counts()} D={self.dim_bound}>"

    # -- simplicial operators ---------------------------------------------------
    def apply(self, theta, simplex):
        """Apply the operator ``X(theta)`` for monotone ``theta: [m] -> [n]``."""
        eta, x = simplex
        comp = tuple(eta[t] for t in theta)
        image = sorted(set(comp))
        pos = {v: i for i, v in enumerate(image)}
        sigma = tuple(pos[v] for v in comp)
        inner = self._inject(tuple(image), x)
        e2, z = inner
        return (tuple(e2[s] for s in sigma), z)

    def _inject(self, iota, x):
        key = (iota, x)
        hit = self._op_cache.get(key)
        if hit is not None:
            return hit
        k = self.dim[x]
        if len(iota) == k + 1:
            res = (identity_surj(k), x)
        else:
            missing = sorted(set(range(k + 1)) - set(iota))
            j = missing[-1]
            face = self.faces[x][j]
            rest = tuple(v if v < j else v - 1 for v in iota)
            res = self.apply(rest, face)
        self._op_cache[key] = res
        return res

    def face(self, i, simplex):
        n = len(simplex[0]) - 1
        if not 0 <= i <= n or n == 0:
            raise SimplicialError(f"face d_{i} undefined in dimension {n}")
        return self.apply(coface(i, n), simplex)

    def degeneracy(self, i, simplex):
        n = len(simplex[0]) - 1
        if not 0 <= i <= n:
            raise SimplicialError(f"degeneracy s_{i} undefined in dimension {n}")
        return self.apply(codegeneracy(i, n), simplex)

    def simplices(self, n):
        """All ``n``-simplices in canonical form, ordered by (k, name, eta)."""
        if n > self.dim_bound:
            raise CapExceeded(f"degree {n} exceeds dimension bound {self.dim_bound}")
        out = []
        for k in range(n + 1):
            surjs = surjections(n, k)
            for x in self.nondeg.get(k, []):
                for eta in surjs:
                    out.append((eta, x))
        return out

    # -- validation ----------------------------------------------------------
    def validate(self):
        """Return a :class:`Validation` describing the first violation, if any."""
        for n in sorted(self.nondeg):
            for x in self.nondeg[n]:
                if n == 0:
                    if x in self.faces and self.faces[x]:
                        return Validation(False, f"vertex {x!r} has faces", x)
                    continue
                fs = self.faces.get(x)
                if fs is None or len(fs) != n + 1:
                    return Validation(False, f"{x!r} needs {n + 1} faces", x)
                for i, (eta, y) in enumerate(fs):
                    if y not in self.dim:
                        return Validation(False, f"face d{i} of {x!r} references unknown simplex {y!r}", x)
                    if len(eta) != n or not is_surjection(eta) or eta[-1] != self.dim[y]:
                        return Validation(False, f"face d{i} of {x!r} has malformed degeneracy data", x)
        for n in sorted(self.nondeg):
            if n < 2:
                continue
            for x in self.nondeg[n]:
                s = self.nd(x)
                for j in range(1, n + 1):
                    for i in range(j):
                        lhs = self.face(i, self.face(j, s))
                        rhs = self.face(j - 1, self.face(i, s))
                        if lhs != rhs:
                            return Validation(False, f"d{i} d{j} != d{j - 1} d{i} on {x!r}", x, (i, j))
        return Validation(True)

    def check(self):
        v = self.validate()
        if not v.ok:
            raise SimplicialError(v.message)
        return self

    # -- subobjects ------------------------------------------------------------
    def sub(self, names, label=None):
        """Simplicial subset on a face-closed set of nondegenerate names."""
        names = set(names)
        for x in names:
            for _, y in self.faces.get(x, ()):
                if y not in names:
                    raise SimplicialError(f"{x!r} has face {y!r} outside the subset")
        nondeg = {n: [x for x in v if x in names] for n, v in self.nondeg.items()}
        faces = {x: f for x, f in self.faces.items() if x in names}
        return SimplicialSet(nondeg, faces, self.dim_bound, label)

    def skeleton(self, n):
        return self.sub([x for x in self.names() if self.dim[x] <= n], label=f"sk{n}")

    # -- serialisation -----------------------------------------------------------
    def to_json(self):
        return {
            "schema": 1,
            "dimension_bound": self.dim_bound,
            "reduced": self.reduced,
            "simplices": {
                str(n): [
                    {
                        "name": x,
                        "faces": [[surjection_to_word(e), y] for e, y in self.faces.get(x, ())],
                    }
                    for x in self.nondeg[n]
                ]
                for n in sorted(self.nondeg)
            },
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        if "simplices" not in data:
            raise SimplicialError("missing 'simplices'")
        nondeg, faces, dims = {}, {}, {}
        raw = {}
        for n_str, entries in data["simplices"].items():
            n = int(n_str)
            nondeg[n] = []
            for ent in entries:
                nondeg[n].append(ent["name"])
                dims[ent["name"]] = n
                raw[ent["name"]] = ent.get("faces", [])
        for x, fs in raw.items():
            out = []
            for i, pair in enumerate(fs):
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise SimplicialError(f"face {i} of {x!r} must be [word, name]")
                word, y = pair
                if y not in dims:
                    raise SimplicialError(f"face d{i} of {x!r} references unknown simplex {y!r}")
                out.append((word_to_surjection(word, dims[y]), y))
            if out:
                faces[x] = out
        X = cls(nondeg, faces, data.get("dimension_bound"))
        if data.get("reduced") and not X.reduced:
            raise SimplicialError("flagged reduced but has more than one vertex")
        return X


@dataclass
class Validation:
    ok: bool
    message: str = "ok"
    simplex: str | None = None
    identity: tuple | None = None

    def __bool__(self):
        return self.ok


def validate(X):
    return X.validate()


def simplices(X, n):
    return X.simplices(n)


# -- maps --------------------------------------------------------------------

class SimplicialMap:
    """A map given on nondegenerate source simplices."""

    def __init__(self, source, target, images, label=None):
        self.source = source
        self.target = target
        self.images = {x: (tuple(e), y) for x, (e, y) in images.items()}
        self.label = label

    def __call__(self, simplex):
        eta, x = simplex
        e2, y = self.images[x]
        return (tuple(e2[t] for t in eta), y)

    def validate(self):
        X, Y = self.source, self.target
        if X.dim_bound > Y.dim_bound:
            return Validation(False, "dimension bound mismatch")
        for x in X.names():
            if x not in self.images:
                return Validation(False, f"no image for {x!r}", x)
            e, y = self.images[x]
            if y not in Y.dim or len(e) != X.dim[x] + 1 or not is_surjection(e) or e[-1] != Y.dim[y]:
                return Validation(False, f"image of {x!r} has the wrong shape", x)
        for x in X.names():
            n = X.dim[x]
            if n == 0:
                continue
            s = X.nd(x)
            for i in range(n + 1):
                if self(X.face(i, s)) != Y.face(i, self(s)):
                    return Validation(False, f"f d{i} != d{i} f on {x!r}", x, (i,))
        return Validation(True)

    def check(self):
        v = self.validate()
        if not v.ok:
            raise SimplicialError(v.message)
        return self

    def is_injective(self):
        seen = set()
        for x, (e, y) in self.images.items():
            if e != identity_surj(len(e) - 1) or y in seen:
                return False
            seen.add(y)
        return True

    def is_isomorphism(self):
        return self.is_injective() and len(self.images) == len(self.target.dim) and self.validate().ok

    def compose(self, other):
        """``self o other``."""
        return SimplicialMap(other.source, self.target, {x: self(s) for x, s in other.images.items()})

    def inverse(self):
        if not self.is_injective() or len(self.images) != len(self.target.dim):
            raise SimplicialError("map is not invertible")
        return SimplicialMap(self.target, self.source, {y: (e, x) for x, (e, y) in self.images.items()})

    def __eq__(self, other):
        return isinstance(other, SimplicialMap) and self.images == other.images

    def to_json(self):
        return {
            "schema": 1,
            "images": {x: [surjection_to_word(e), y] for x, (e, y) in self.images.items()},
        }

    @classmethod
    def from_json(cls, data, source, target):
        imgs = {}
        for x, (word, y) in data["images"].items():
            if y not in target.dim:
                raise SimplicialError(f"image of {x!r} references unknown simplex {y!r}")
            imgs[x] = (word_to_surjection(word, target.dim[y]), y)
        return cls(source, target, imgs)


def identity_map(X):
    return SimplicialMap(X, X, {x: X.nd(x) for x in X.names()})


def map_compose(f, g):
    """``f o g``."""
    return f.compose(g)


def map_validate(f):
    return f.validate()


def constant_map(X, Y):
    """Map from ``X`` to a reduced ``Y`` collapsing everything to the basepoint."""
    b = Y.basepoint
    return SimplicialMap(X, Y, {x: ((0,) * (X.dim[x] + 1), b) for x in X.names()})


# -- standard models -------------------------------------------------------------

def _std_simplex(n, boundary=False, D=None):
    verts = [str(i) for i in range(n + 1)]
    nondeg, faces = {}, {}
    sep = "" if n < 10 else "."
    for k in range(n + 1):
        if boundary and k == n:
            continue
        for combo in itertools.combinations(range(n + 1), k + 1):
            name = sep.join(verts[i] for i in combo)
            nondeg.setdefault(k, []).append(name)
            if k:
                faces[name] = [
                    (identity_surj(k - 1), sep.join(verts[c] for j, c in enumerate(combo) if j != i)) for i in range(k + 1)
                ]
    label = f"boundary{n}" if boundary else f"Delta{n}"
    return SimplicialSet(nondeg, faces, D if D is not None else n + 1, label)


def _reduced(cells, D, label):
    """``cells``: {dim: [(name, [face names or '' for the degenerate basepoint])]}."""
    nondeg = {0: [BASEPOINT]}
    dims = {BASEPOINT: 0}
    faces = {}
    for n in sorted(cells):
        for name, fs in cells[n]:
            nondeg.setdefault(n, []).append(name)
            dims[name] = n
            out = []
            for y in fs:
                k = dims[y]
                if k not in (0, n - 1):
                    raise SimplicialError(f"face {y!r} of {name!r} must be the basepoint or of dimension {n - 1}")
                out.append((identity_surj(k) if k else (0,) * n, y))
            faces[name] = out
    X = SimplicialSet(nondeg, faces, D, label)
    return X


MODEL_NAMES = ("point", "Delta<n>", "boundary<n>", "S1", "S2", "RP2", "T2", "wedge_S1_S1")


def standard_model(name, D=None):
    """A validated model from the built-in corpus.

    ``S2`` is the quotient of the 2-simplex by its boundary; ``RP2`` has
    edges ``a, b`` and triangles ``u, v`` whose faces impose ``b = a.a`` and
    ``a = a.b``; ``T2`` has edges ``a, b, c`` and triangles ``u, v`` with
    ``c = a.b = b.a`` (faces listed as ``d0, d1, d2``).
    """
    key = name.replace("Δ", "Delta").replace("∂Delta", "boundary").replace("∨", "_wedge_")
    top = {"point": 0, "S1": 1, "S2": 2, "RP2": 2, "T2": 2, "wedge_S1_S1": 1}
    b = BASEPOINT
    if key.startswith("Delta") and key[5:].isdigit():
        X = _std_simplex(int(key[5:]), False, D)
    elif key.startswith("boundary") and key[8:].isdigit():
        X = _std_simplex(int(key[8:]), True, D)
    elif key in top:
        D = D if D is not None else top[key] + 1
        if key == "point":
            X = _reduced({}, D, "point")
        elif key == "S1":
            X = _reduced({1: [("a", [b, b])]}, D, "S1")
        elif key == "wedge_S1_S1":
            X = _reduced({1: [("a", [b, b]), ("b", [b, b])]}, D, "wedge_S1_S1")
        elif key == "S2":
            X = _reduced({2: [("sigma", [b, b, b])]}, D, "S2")
        elif key == "RP2":
            # d1 = d2 . d0 :  u gives b = a.a ; v gives a = a.b
            X = _reduced({1: [("a", [b, b]), ("b", [b, b])], 2: [("u", ["a", "b", "a"]), ("v", ["b", "a", "a"])]}, D, "RP2")
        else:
            X = _reduced(
                {1: [("a", [b, b]), ("b", [b, b]), ("c", [b, b])], 2: [("u", ["b", "c", "a"]), ("v", ["a", "c", "b"])]},
                D,
                "T2",
            )
    else:
        raise KeyError(f"unknown model {name!r}; choose from {', '.join(MODEL_NAMES)}")
    return X.check()


# -- colimits ----------------------------------------------------------------------

def _rename_faces(faces, ren):
    return [(e, ren(y)) for e, y in faces]


def wedge(spaces, labels=None):
    """One-point union of reduced simplicial sets.

    Returns ``(W, inclusions)``. With ``labels`` every non-basepoint simplex
    ``x`` of summand ``i`` is renamed ``f"{labels[i]}|{x}"``; without labels
    names are kept unless they collide, in which case the summand index is
    used as the label.
    """
    spaces = list(spaces)
    for X in spaces:
        if not X.reduced:
            raise SimplicialError("wedge needs reduced inputs")
    if labels is None:
        seen = set()
        clash = False
        for X in spaces:
            for x in X.names():
                if X.dim[x] > 0:
                    clash |= x in seen
                    seen.add(x)
        labels = [str(i) for i in range(len(spaces))] if clash else [None] * len(spaces)
    D = max([X.dim_bound for X in spaces], default=0)
    nondeg = {0: [BASEPOINT]}
    faces = {}
    incs = []
    for X, lab in zip(spaces, labels):
        base = X.basepoint

        def ren(y, base=base, lab=lab):
            if y == base:
                return BASEPOINT
            return y if lab is None else f"{lab}|{y}"

        for n in sorted(X.nondeg):
            if n == 0:
                continue
            for x in X.nondeg[n]:
                nondeg.setdefault(n, []).append(ren(x))
                faces[ren(x)] = _rename_faces(X.faces[x], ren)
        incs.append((X, ren))
    W = SimplicialSet(nondeg, faces, D, "wedge")
    maps = [SimplicialMap(X, W, {x: (identity_surj(X.dim[x]), ren(x)) for x in X.names()}) for X, ren in incs]
    return W, maps


def pushout(f, g, label="pushout"):
    """Pushout of ``X <-f- A -g-> Y`` where ``f`` or ``g`` is a monomorphism.

    Returns ``(P, i_X, i_Y)`` with ``i_X: X -> P`` and ``i_Y: Y -> P``.
    """
    if f.source is not g.source and f.source != g.source:
        raise SimplicialError("pushout legs must share their source")
    swapped = False
    if not f.is_injective():
        if not g.is_injective():
            raise SimplicialError("neither leg is a monomorphism")
        f, g = g, f
        swapped = True
    X, Y = f.target, g.target
    image_of = {f.images[a][1]: a for a in f.images}
    fresh = [x for x in X.names() if x not in image_of]
    taken = set(Y.dim)
    ren = {x: (x if x not in taken else f"X|{x}") for x in fresh}

    def to_p(simplex):
        eta, z = simplex
        if z in image_of:
            return _push(eta, g.images[image_of[z]])
        return (eta, ren[z])

    nondeg = {n: list(v) for n, v in Y.nondeg.items()}
    faces = {y: list(fs) for y, fs in Y.faces.items()}
    for x in fresh:
        nondeg.setdefault(X.dim[x], []).append(ren[x])
        faces[ren[x]] = [to_p(s) for s in X.faces.get(x, ())]
    P = SimplicialSet(nondeg, faces, max(X.dim_bound, Y.dim_bound), label)
    iX = SimplicialMap(X, P, {x: to_p(X.nd(x)) for x in X.names()})
    iY = SimplicialMap(Y, P, {y: Y.nd(y) for y in Y.names()})
    if swapped:
        return P, iY, iX
    return P, iX, iY


def _push(eta, image):
    e2, y = image
    return (tuple(e2[t] for t in eta), y)


def pushout_induced(P, iX, iY, cone_X, cone_Y):
    """The unique map ``P -> Z`` out of a pushout given a commuting cone.

    Raises if the cone does not factor (i.e. the universal property fails).
    """
    Z = cone_X.target
    from_y = {p for _, p in iY.images.values()}
    images = {}
    for x, (e, p) in iX.images.items():
        if e == identity_surj(len(e) - 1) and p not in from_y:
            images[p] = cone_X(iX.source.nd(x))
    for y, (e, p) in iY.images.items():
        images[p] = cone_Y(iY.source.nd(y))
    u = SimplicialMap(P, Z, images)
    u.check()
    if u.compose(iX) != cone_X or u.compose(iY) != cone_Y:
        raise SimplicialError("cone does not factor through the pushout")
    return u


def union_chain(chain):
    """Colimit of an ascending chain of simplicial subsets of one ambient set."""
    names = set()
    for X in chain:
        names |= set(X.names())
    last = chain[-1]
    nondeg = {}
    faces = {}
    for X in chain:
        for n, v in X.nondeg.items():
            for x in v:
                if x not in nondeg.setdefault(n, []):
                    nondeg[n].append(x)
        faces.update(X.faces)
    return SimplicialSet(nondeg, faces, max(X.dim_bound for X in chain), getattr(last, "label", None))


def find_isomorphism(X, Y):
    """A simplicial isomorphism ``X -> Y`` (name bijection) or ``None``."""
    if X.counts() != Y.counts() and [X.count(n) for n in range(X.top_dim + 1)] != [Y.count(n) for n in range(Y.top_dim + 1)]:
        return None
    order = X.names()
    assign = {}
    used = set()

    def consistent(x):
        y = assign[x]
        for (e1, a), (e2, b) in zip(X.faces.get(x, ()), Y.faces.get(y, ())):
            if e1 != e2 or assign.get(a) != b:
                return False
        return True

    def search(idx):
        if idx == len(order):
            return True
        x = order[idx]
        for y in Y.nondeg.get(X.dim[x], []):
            if y in used:
                continue
            assign[x] = y
            used.add(y)
            if consistent(x) and search(idx + 1):
                return True
            used.discard(y)
            del assign[x]
        return False

    if search(0):
        return SimplicialMap(X, Y, {x: Y.nd(y) for x, y in assign.items()})
    return None


def pushout_map(P, iX, iY, target, uX, uY):
    """Map ``P -> target`` out of a pushout, given its values on both legs.

    ``uX: X -> target`` and ``uY: Y -> target`` must agree on the common
    source; the result is checked to be a simplicial map.
    """
    images = {}
    for y, (_, p) in iY.images.items():
        images[p] = uY(iY.source.nd(y))
    for x, (e, p) in iX.images.items():
        if p not in images and e == identity_surj(len(e) - 1):
            images[p] = uX(iX.source.nd(x))
    return SimplicialMap(P, target, images).check()
