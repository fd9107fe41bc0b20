"""Sound, possibly inconclusive, decision procedures for three equivalence notions.

* notion 3: ``F``-homology isomorphism of normalized chains;
* notion 2: isomorphism on fundamental groups plus ``F``-homology
  isomorphism of universal covers;
* notion 1: isomorphism on cobar homology of normalized chains, exact when
  both ends have no nondegenerate edges, and compared through the monoid
  presentation of ``H_0`` otherwise.

Every verdict is relative to the caps it records. The notions are nested
(1 inside 2 inside 3), so a certified "No" for a coarser notion is also a
certified "No" for a finer one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coalgebra import chains, chains_equivariant, coalg_fixed_points, points
from .dgcobar import (
    cobar,
    h0_presentation,
    induced_cobar_homology,
    induced_homology_map,
    normalized,
)
from .equivariant import as_subgroup, fixed_points, subgroups
from .errors import Inconclusive
from .fields import QQ
from .fundamental_group import COSET_BOUND, fundamental_group, group_from_table, universal_cover
from .presentation import inverse_letter
from .rewriting import completed_system
from .simplicial import SimplicialMap, identity_surj

YES, NO, INCONCLUSIVE = "Yes", "No", "Inconclusive"

DEFAULT_CAPS = {"degree": 4, "length": 4, "coset_bound": COSET_BOUND, "h0_length": 3}


@dataclass
class Verdict:
    value: str
    notion: int
    evidence: dict = field(default_factory=dict)
    caps: dict = field(default_factory=dict)

    @property
    def yes(self):
        return self.value == YES

    @property
    def no(self):
        return self.value == NO

    def to_json(self):
        return {
            "notion": self.notion,
            "verdict": self.value,
            "caps": dict(sorted(self.caps.items())),
            "evidence": self.evidence,
        }


def _caps(caps):
    out = dict(DEFAULT_CAPS)
    out.update(caps or {})
    return out


def _homology_cap(f, cap):
    if cap is not None:
        return cap
    return max(f.source.top_dim, f.target.top_dim)


def _restrict_bound(X, D):
    return X.with_bound(D) if X.dim_bound != D else X


def _map_with_bound(f, D):
    return SimplicialMap(_restrict_bound(f.source, D), _restrict_bound(f.target, D), f.images)


# -- notion 3 ---------------------------------------------------------------------------

def homology_comparison(f, F, cap):
    """Per-degree ``(dim H_n X, dim H_n Y, rank H_n(f))`` through ``cap``."""
    g = _map_with_bound(f, cap + 1)
    dgX = normalized(g.source, F, cap + 1)
    dgY = normalized(g.target, F, cap + 1)
    return [induced_homology_map(g, dgX, dgY, n) for n in range(cap + 1)]


def is_F_equiv(f, F, cap=None):
    """Homology isomorphism through degree ``cap`` (default: the larger top dimension)."""
    cap = _homology_cap(f, cap)
    caps = {"degree": cap, "field": F.name}
    rows = homology_comparison(f, F, cap)
    table = [{"degree": n, "source": hx, "target": hy, "rank": r} for n, (hx, hy, r) in enumerate(rows)]
    for n, (hx, hy, r) in enumerate(rows):
        if not (hx == hy == r):
            return Verdict(NO, 3, {"failed_degree": n, "homology": table}, caps)
    return Verdict(YES, 3, {"homology": table}, caps)


# -- notion 2 ---------------------------------------------------------------------------

def _group_map(f, piX, piY):
    """Induced map on regular representations, as a list over cosets of ``X``."""
    GX = group_from_table(piX.table)
    GY = group_from_table(piY.table)
    Y = f.target
    gen_img = {}
    for e in piX.presentation.generators:
        _, y = f.images[e]
        gen_img[e] = GY.e if Y.dim[y] == 0 else piY.table.action[y][0]
        gen_img[inverse_letter(e)] = GY.inv(gen_img[e])
    phi = []
    for w in GX.words:
        acc = GY.e
        for x in w:
            acc = GY.mul(acc, gen_img[x])
        phi.append(acc)
    for a in range(GX.order):
        for e in piX.presentation.generators:
            b = piX.table.action[e][a]
            if phi[b] != GY.mul(phi[a], gen_img[e]):
                raise AssertionError("induced map on fundamental groups is not a homomorphism")
    return GX, GY, phi


def _cover_map(f, covX, covY, phi):
    images = {}
    for name in covX.total.names():
        x, g = name.rsplit("@", 1)
        eta, y = f.images[x]
        images[name] = (eta, f"{y}@{phi[int(g)]}")
    return SimplicialMap(covX.total, covY.total, images)


def is_pi1_F_equiv(f, F, cap=None, caps=None):
    """Fundamental-group isomorphism plus homology isomorphism of universal covers."""
    caps = _caps(caps)
    cap = _homology_cap(f, cap)
    used = {"degree": cap, "coset_bound": caps["coset_bound"], "field": F.name}
    X, Y = f.source, f.target
    if not (X.reduced and Y.reduced):
        return Verdict(INCONCLUSIVE, 2, {"reason": "both ends must be reduced"}, used)
    if f.is_isomorphism():
        return Verdict(YES, 2, {"certificate": "simplicial isomorphism"}, used)
    piX = fundamental_group(X, caps["coset_bound"])
    piY = fundamental_group(Y, caps["coset_bound"])
    ev = {"pi1_source": piX.to_json(), "pi1_target": piY.to_json()}
    if piX.finite != piY.finite and "infinite" in (piX.certificate, piY.certificate):
        return Verdict(NO, 2, {**ev, "reason": "one group is finite, the other infinite"}, used)
    if piX.finite and piY.finite and piX.order != piY.order:
        return Verdict(NO, 2, {**ev, "reason": f"group orders {piX.order} and {piY.order} differ"}, used)
    abX, abY = piX.abelian, piY.abelian
    if (abX.free_rank, abX.torsion) != (abY.free_rank, abY.torsion):
        return Verdict(NO, 2, {**ev, "reason": "abelianizations differ"}, used)
    if piX.finite and piY.finite:
        GX, GY, phi = _group_map(f, piX, piY)
        if len(set(phi)) != GX.order:
            return Verdict(NO, 2, {**ev, "reason": "induced map on fundamental groups is not injective"}, used)
    rational = is_F_equiv(f, QQ(), min(cap, 1))
    if rational.no:
        return Verdict(NO, 2, {**ev, "reason": "map is not an isomorphism on rational H_1"}, used)
    coarse = is_F_equiv(f, F, cap)
    if coarse.no:
        return Verdict(NO, 2, {**ev, "reason": "F-homology is not preserved", "notion3": coarse.evidence}, used)
    if not (piX.finite and piY.finite):
        return Verdict(INCONCLUSIVE, 2, {**ev, "reason": "isomorphism of infinite groups is not certified"}, {**used, "limit": "coset bound"})
    covX = universal_cover(_restrict_bound(X, cap + 1), piX.table)
    covY = universal_cover(_restrict_bound(Y, cap + 1), piY.table)
    lift = _cover_map(f, covX, covY, phi)
    v = lift.validate()
    if not v.ok:
        raise AssertionError(f"lifted map is not simplicial: {v.message}")
    cover = is_F_equiv(lift, F, cap)
    ev["cover_homology"] = cover.evidence["homology"]
    if cover.no:
        return Verdict(NO, 2, {**ev, "reason": "universal covers differ in F-homology"}, used)
    return Verdict(YES, 2, {**ev, "certificate": "group isomorphism and cover homology isomorphism"}, used)


# -- notion 1 ---------------------------------------------------------------------------

def _h0_image(f, word):
    out = []
    for e in word:
        _, y = f.images[e]
        if f.target.dim[y] == 1:
            out.append(y)
    return tuple(out)


def h0_comparison(f, max_len=3):
    """Compare ``H_0`` monoid algebras through normal forms of length ``<= max_len``.

    Returns ``(status, evidence)`` with status ``"injective"``, ``"bijective"``
    or ``"not injective"``/``"not surjective"``; raises :class:`Inconclusive`
    when completion fails.
    """
    PX, PY = h0_presentation(f.source), h0_presentation(f.target)
    RX, RY = completed_system(PX), completed_system(PY)
    nfX, nfY = RX.normal_forms(max_len), RY.normal_forms(max_len)
    fullX, fullY = nfX is not None, nfY is not None
    if nfX is None:
        nfX = [w for w in _words(RX, max_len)]
    if nfY is None:
        nfY = [w for w in _words(RY, max_len)]
    seen = {}
    for w in nfX:
        img = RY.reduce(_h0_image(f, w))
        if img in seen:
            return "not injective", {"words": [list(seen[img]), list(w)], "image": list(img)}
        seen[img] = w
    ev = {"presentations": [PX.format(), PY.format()], "normal_forms_checked": len(nfX)}
    if fullX and not fullY:
        return "not surjective", {**ev, "reason": "finite monoid maps to an infinite one"}
    if fullX and fullY:
        if len(seen) != len(nfY):
            return "not surjective", {**ev, "missed": sorted(list(w) for w in set(nfY) - set(seen))}
        return "bijective", ev
    if all(not _h0_image(f, (e,)) for e in PX.generators) and any(len(w) == 1 for w in nfY):
        return "not surjective", {**ev, "reason": "every generator maps to the unit"}
    return "injective", ev


def _words(system, max_len):
    level, out = [()], [()]
    for _ in range(max_len):
        level = [w + (x,) for w in level for x in system.letters if system.is_irreducible(w + (x,))]
        out.extend(level)
    return out


def is_cat_F_equiv(f, F, caps=None):
    """Cobar-homology comparison of normalized chains."""
    caps = _caps(caps)
    N, L = caps["degree"], caps["length"]
    used = {"degree": N, "length": L, "field": F.name}
    X, Y = f.source, f.target
    if f.is_isomorphism():
        return Verdict(YES, 1, {"certificate": "simplicial isomorphism"}, used)
    g = _map_with_bound(f, N + 1)
    dgX = normalized(g.source, F, N + 1)
    dgY = normalized(g.target, F, N + 1)
    cbX, cbY = cobar(dgX, N, L), cobar(dgY, N, L)
    used["length"] = max(cbX.L, cbY.L)
    if cbX.exact and cbY.exact:
        used["regime"] = "simply-connected"
        table = []
        for n in range(N):
            hx, hy, r = induced_cobar_homology(g, cbX, cbY, n)
            table.append({"degree": n, "source": hx, "target": hy, "rank": r})
            if not (hx == hy == r):
                return Verdict(NO, 1, {"failed_degree": n, "cobar_homology": table}, used)
        return Verdict(YES, 1, {"cobar_homology": table}, used)
    used["regime"] = "length-relative"
    used["h0_length"] = caps["h0_length"]
    if not (X.reduced and Y.reduced):
        return Verdict(INCONCLUSIVE, 1, {"reason": "H_0 comparison needs reduced ends"}, used)
    try:
        status, ev = h0_comparison(f, caps["h0_length"])
    except Inconclusive as exc:
        status, ev = "inconclusive", {"reason": str(exc), "limit": exc.cap}
    ev["h0"] = status
    if status.startswith("not"):
        return Verdict(NO, 1, {**ev, "reason": f"H_0 map is {status}"}, used)
    coarse = is_F_equiv(f, F, min(N - 1, _homology_cap(f, None)))
    if coarse.no:
        return Verdict(NO, 1, {**ev, "reason": "F-homology is not preserved", "notion3": coarse.evidence}, used)
    if status == "inconclusive":
        return Verdict(INCONCLUSIVE, 1, ev, {**used, "limit": ev["limit"]})
    return Verdict(INCONCLUSIVE, 1, {**ev, "reason": "higher cobar homology is length-relative"}, {**used, "limit": "length cap"})


ORACLES = {1: is_cat_F_equiv, 2: is_pi1_F_equiv, 3: is_F_equiv}


def run_oracle(notion, f, F, caps=None):
    caps = _caps(caps)
    if notion == 3:
        return is_F_equiv(f, F, caps.get("homology_degree"))
    if notion == 2:
        return is_pi1_F_equiv(f, F, caps.get("homology_degree"), caps)
    if notion == 1:
        return is_cat_F_equiv(f, F, caps)
    raise ValueError(f"unknown notion {notion}")


# -- equivariant ------------------------------------------------------------------------

def fixed_map(f, A, B, H):
    """``f^H : A^H -> B^H``."""
    AH, BH = fixed_points(A, H), fixed_points(B, H)
    return SimplicialMap(AH, BH, {x: f.images[x] for x in AH.names()})


def coalgebra_fixed_map(f, A, B, H, F):
    """``f`` transported to the points of the coalgebra fixed points."""
    subA = coalg_fixed_points(chains_equivariant(A, F), H)
    subB = coalg_fixed_points(chains_equivariant(B, F), H)
    PA, PB = points(subA), points(subB)
    CA, CB = chains(A.X, F), chains(B.X, F)

    def ambient(P, C, sub_coalg, n, simplex):
        v = P.vectors[n][simplex]
        emb = sub_coalg.C[n].embedding
        out = [C.F.zero] * C.C[n].dim
        for a, w in zip(v, emb):
            if a != C.F.zero:
                out = [C.F.add(x, C.F.mul(a, y)) for x, y in zip(out, w)]
        return out

    lookup = []
    for n in range(len(subB.C)):
        table = {}
        for simplex in PB.vectors[n]:
            vec = ambient(PB, CB, subB, n, simplex)
            (i,) = [i for i, c in enumerate(vec) if c != F.zero]
            table[CB.C[n].keys[i]] = simplex
        lookup.append(table)
    images = {}
    for n in sorted(PA.nondeg):
        for name in PA.nondeg[n]:
            s = (identity_surj(n), name)
            vec = ambient(PA, CA, subA, n, s)
            (i,) = [i for i, c in enumerate(vec) if c != F.zero]
            images[name] = lookup[n][f(CA.C[n].keys[i])]
    return SimplicialMap(PA, PB, images)


def g_equivalence(f, A, B, notion, F, caps=None, side="simplicial"):
    """Apply an oracle to ``f^H`` for every subgroup ``H``; aggregate Yes iff all Yes."""
    rows = []
    for H in subgroups(A.G):
        if side == "simplicial":
            fH = fixed_map(f, A, B, H)
        elif side == "coalgebra":
            fH = coalgebra_fixed_map(f, A, B, H, F)
        else:
            raise ValueError(f"unknown side {side!r}")
        v = run_oracle(notion, fH, F, caps)
        rows.append({"subgroup": H.label(), "order": H.order, **v.to_json()})
    values = [r["verdict"] for r in rows]
    if all(v == YES for v in values):
        agg = YES
    elif NO in values:
        agg = NO
    else:
        agg = INCONCLUSIVE
    return {"notion": notion, "side": side, "verdict": agg, "table": rows}


def trivial_subgroup_verdict(f, A, B, notion, F, caps=None):
    H = as_subgroup(A.G, [A.G.e])
    return run_oracle(notion, fixed_map(f, A, B, H), F, caps)


# -- inclusion audit --------------------------------------------------------------------

def monotone(v1, v2, v3):
    """``v1 = Yes => v2 in {Yes, Inconclusive}`` and ``v2 = Yes => v3 = Yes``."""
    if v1 == YES and v2 == NO:
        return False
    if v2 == YES and v3 != YES:
        return False
    return True


def inclusion_audit(corpus, caps=None):
    """Verdict triples for ``(name, map, field)`` entries and any monotonicity violations."""
    rows, violations = [], []
    for name, f, F in corpus:
        v = {n: run_oracle(n, f, F, caps).value for n in (1, 2, 3)}
        row = {"map": name, "field": F.name, "v1": v[1], "v2": v[2], "v3": v[3]}
        rows.append(row)
        if not monotone(v[1], v[2], v[3]):
            violations.append(row)
    return {"rows": rows, "violations": violations, "ok": not violations}
