"""Claim checks run across a universe, and the counterexample search.

Each registered claim walks the universe and tallies instances as confirmed,
skipped (hypothesis not met) or violating.  ``report`` claims never make the
run fail; their violations are listed as data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from acta.act import Act, Hom, Subact, all_subacts, coproduct, cyclic_subact, decompose_indecomposable, factor_act
from acta.act import is_subact, product, regular_act, subact_closure
from acta.classify import (
    check_chain,
    cofaithful_witness,
    is_faithful,
    is_irreducible,
    is_subdirectly_irreducible,
    subgenerator_witness,
)
from acta.cogen import cotrace, enumerate_homs, is_generator, subdirect_decomposition
from acta.congruence import (
    all_congruences,
    meet,
    meet_all,
    minimal_congruences,
    monolith,
    principal_congruence,
    rees_congruence,
)
from acta.kernels import INJECTIVE, hom_search
from acta.monoid import Monoid
from acta.structure import is_essential_mono, is_large, is_theta_simple, radical, socle
from acta.universe import Universe, build_universe

HARD = "hard"
REPORT = "report"


@dataclass
class ClaimResult:
    claim: str
    mode: str
    checked: int = 0
    confirmed: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)

    def confirm(self, n: int = 1):
        self.checked += n
        self.confirmed += n

    def skip(self, n: int = 1, note: dict | None = None):
        self.checked += n
        self.skipped += n
        if note is not None:
            self.notes.append(note)

    def violate(self, record: dict):
        self.checked += 1
        self.violations.append(record)

    @property
    def consistent(self) -> bool:
        return self.checked == self.confirmed + self.skipped + len(self.violations)

    @property
    def failed(self) -> bool:
        return self.mode == HARD and bool(self.violations)

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "mode": self.mode,
            "checked": self.checked,
            "confirmed": self.confirmed,
            "skipped": self.skipped,
            "violations": self.violations,
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def _enc_monoid(M: Monoid) -> list[list[int]]:
    return M.table.tolist()


def _enc_act(A: Act) -> list[list[int]]:
    return A.action.tolist()


def _record(i: int, j: int | None, U: Universe, **details) -> dict:
    rec = {"monoid": i}
    if j is not None:
        rec["act"] = j
        rec["action"] = _enc_act(U.acts[i][j])
    rec["details"] = details
    return rec


class Context:
    """Shared caches for one universe."""

    def __init__(self, U: Universe):
        self.U = U
        self._cot: dict[tuple[bytes, bytes], int] = {}
        self._cotmat: dict[int, np.ndarray] = {}
        self._regular: dict[int, Act] = {}

    def regular(self, i: int) -> Act:
        if i not in self._regular:
            self._regular[i] = regular_act(self.U.monoids[i])
        return self._regular[i]

    def cot_mask(self, A: Act, C: Act) -> int:
        key = (A.key, C.key)
        if key not in self._cot:
            self._cot[key] = cotrace(A, [C]).mask
        return self._cot[key]

    def cot_matrix(self, i: int) -> np.ndarray:
        """``[a, c]`` = pair mask of cotr_A(C) for acts a, c over monoid i."""
        if i not in self._cotmat:
            acts = self.U.acts[i]
            mat = np.array([[self.cot_mask(A, C) for C in acts] for A in acts], dtype=np.int64)
            self._cotmat[i] = mat.reshape(len(acts), len(acts))
        return self._cotmat[i]

    def class_cogen(self, i: int, a: int) -> np.ndarray:
        """``[j, k]`` = whether {C_j, C_k} cogenerates act a."""
        row = self.cot_matrix(i)[a]
        return (row[:, None] & row[None, :]) == 0


# --------------------------------------------------------------------------
# claims


def claim_chain(ctx: Context) -> ClaimResult:
    """generator ⟹ subgenerator ⟹ cofaithful ⟹ faithful."""
    res = ClaimResult("chain", HARD)
    for i, j, A in ctx.U.instances():
        flags = (is_generator(A), subgenerator_witness(A) is not None, cofaithful_witness(A) is not None, is_faithful(A))
        broken = check_chain(*flags)
        if broken:
            res.violate(_record(i, j, ctx.U, broken=broken))
        else:
            res.confirm()
    return res


def projective_family(M: Monoid, max_summands: int = 3) -> list[Act]:
    """Coproducts of up to ``max_summands`` cyclic retracts eS, e idempotent."""
    from acta.act import act_isomorphic

    S = regular_act(M)
    pieces: list[Act] = []
    for e in M.idempotents():
        P, _ = cyclic_subact(S, e).as_act()
        if not any(P.size == Q.size and act_isomorphic(P, Q) for Q in pieces):
            pieces.append(P)
    out = []
    for k in range(1, max_summands + 1):
        for combo in itertools.combinations_with_replacement(range(len(pieces)), k):
            out.append(coproduct([pieces[x] for x in combo])[0])
    return out


def retract_family(M: Monoid) -> list[Act]:
    """The single-summand members eS of the projective test family."""
    return projective_family(M, 1)


def _faithful_check(ctx: Context, name: str, mode: str, family: Callable[[Monoid], list[Act]]) -> ClaimResult:
    res = ClaimResult(name, mode)
    for i, M in enumerate(ctx.U.monoids):
        S = ctx.regular(i)
        projectives = family(M)
        for j, A in enumerate(ctx.U.acts[i]):
            f = is_faithful(A)
            c_s = ctx.cot_mask(S, A) == 0
            failing = [P for P in projectives if ctx.cot_mask(P, A) != 0]
            c_p = not failing
            if f == c_s == c_p:
                res.confirm()
            else:
                details = dict(faithful=f, cogenerates_S=c_s, cogenerates_projectives=c_p)
                if failing:
                    details["first_failing_projective"] = _enc_act(failing[0])
                res.violate(_record(i, j, ctx.U, **details))
    return res


def claim_faithful_cogenerates_regular(ctx: Context) -> ClaimResult:
    """faithful ⟺ A cogenerates S_S ⟺ A cogenerates every retract eS."""
    return _faithful_check(ctx, "faithful-cogenerates-regular", HARD, retract_family)


def claim_faithful_cogenerates_projectives(ctx: Context) -> ClaimResult:
    """As above, over coproducts of up to three retracts eS.

    Fails whenever some pair of summand elements has no separating hom into A,
    e.g. S ⊔ S over the trivial monoid against a one-point A.
    """
    return _faithful_check(ctx, "faithful-cogenerates-projectives", REPORT, projective_family)


def _cotrace_sweep(ctx: Context, name: str, mode: str, upward: bool) -> ClaimResult:
    """Compare cogenerates(𝒞, A/θ) with θ ⊇ cotr_A(𝒞) over θ ∈ Con(A) and |𝒞| <= 2.

    With ``upward`` False only the implication cogenerated ⟹ θ ⊇ cotr is
    checked, together with A/cotr itself being cogenerated.
    """
    res = ClaimResult(name, mode)
    for i in range(len(ctx.U.monoids)):
        acts = ctx.U.acts[i]
        N = len(acts)
        cot = ctx.cot_matrix(i)
        upper = np.triu(np.ones((N, N), dtype=bool))
        for a, A in enumerate(acts):
            bad = np.zeros((N, N), dtype=bool)
            witness = {}
            arow = cot[a]
            meets = arow[:, None] & arow[None, :]
            for theta in all_congruences(A):
                Q, _ = factor_act(A, theta)
                qrow = np.array([ctx.cot_mask(Q, C) for C in acts], dtype=np.int64)
                lhs = (qrow[:, None] & qrow[None, :]) == 0
                rhs = (meets & ~theta.mask) == 0
                if upward:
                    diff = lhs != rhs
                else:
                    # least: cogenerated quotients lie above, and θ = cotr is cogenerated
                    diff = (lhs & ~rhs) | (~lhs & (meets == theta.mask))
                diff &= upper & ~bad
                for j, k in zip(*np.nonzero(diff)):
                    witness[(int(j), int(k))] = list(theta.labels)
                bad |= diff
            res.confirm(int(upper.sum()) - int(bad.sum()))
            for (j, k), lab in sorted(witness.items()):
                res.violate(_record(i, a, ctx.U, cls=[j, k], theta=lab))
    return res


def claim_cotrace_least(ctx: Context) -> ClaimResult:
    """cotr_A(𝒞) is the least θ with A/θ cogenerated by 𝒞."""
    return _cotrace_sweep(ctx, "cotrace-least", HARD, upward=False)


def claim_cotrace_minimality(ctx: Context) -> ClaimResult:
    """cogenerates(𝒞, A/θ) ⟺ θ ⊇ cotr_A(𝒞), both directions.

    The backward direction fails when a quotient above the cotrace loses the
    separating homs, so this is report-only.
    """
    return _cotrace_sweep(ctx, "cotrace-minimality", REPORT, upward=True)


def claim_cotrace_monotone(ctx: Context) -> ClaimResult:
    """D cogenerated by C ⟹ cotr_A(C) ⊆ cotr_A(D) for every A."""
    res = ClaimResult("cotrace-monotone", HARD)
    for i in range(len(ctx.U.monoids)):
        cot = ctx.cot_matrix(i)
        N = cot.shape[0]
        for c in range(N):
            for d in range(N):
                if cot[d, c] != 0:
                    res.skip()
                    continue
                bad = np.flatnonzero(cot[:, c] & ~cot[:, d])
                if len(bad):
                    res.violate(_record(i, None, ctx.U, C=c, D=d, acts=bad.tolist()))
                else:
                    res.confirm()
    return res


def claim_subobject_closure(ctx: Context) -> ClaimResult:
    """A ∈ Cog(𝒞) and A' ↪ A ⟹ A' ∈ Cog(𝒞), for all classes of size <= 2."""
    res = ClaimResult("cog-subobject-closure", HARD)
    for i in range(len(ctx.U.monoids)):
        acts = ctx.U.acts[i]
        for b, A in enumerate(acts):
            GA = ctx.class_cogen(i, b)
            for a, Asub in enumerate(acts):
                if Asub.size > A.size or not len(hom_search(Asub.action, A.action, Asub.generators, mode=INJECTIVE)):
                    res.skip()
                    continue
                bad = GA & ~ctx.class_cogen(i, a)
                if bad.any():
                    j, k = (int(x) for x in np.argwhere(bad)[0])
                    res.violate(_record(i, b, ctx.U, subact=a, cls=[j, k]))
                else:
                    res.confirm()
    return res


def _pair_bits(mask: int, npairs: int) -> np.ndarray:
    return np.array([(mask >> p) & 1 for p in range(npairs)], dtype=np.int64)


def claim_product_closure(ctx: Context) -> ClaimResult:
    """A1, A2 ∈ Cog(𝒞) ⟹ A1 × A2 ∈ Cog(𝒞), for all classes of size <= 2."""
    res = ClaimResult("cog-product-closure", HARD)
    for i in range(len(ctx.U.monoids)):
        acts = ctx.U.acts[i]
        for a1, a2 in itertools.combinations_with_replacement(range(len(acts)), 2):
            P, _ = product([acts[a1], acts[a2]])
            npairs = P.size * (P.size - 1) // 2
            bits = np.stack([_pair_bits(cotrace(P, [C]).mask, npairs) for C in acts]) if npairs else None
            GP = (bits @ bits.T) == 0 if bits is not None else np.ones((len(acts),) * 2, dtype=bool)
            bad = ctx.class_cogen(i, a1) & ctx.class_cogen(i, a2) & ~GP
            if bad.any():
                j, k = (int(x) for x in np.argwhere(bad)[0])
                res.violate(_record(i, a1, ctx.U, other=a2, cls=[j, k]))
            else:
                res.confirm()
    return res


def _class_constructions(ctx: Context, i: int):
    """Yield (j, k, ∏, ∐) for distinct pairs of acts over monoid i."""
    acts = ctx.U.acts[i]
    for j, k in itertools.combinations(range(len(acts)), 2):
        yield j, k, product([acts[j], acts[k]])[0], coproduct([acts[j], acts[k]])[0]


def claim_sandwich(ctx: Context) -> ClaimResult:
    """Cog(C1 × C2) ⊆ Cog({C1, C2}) ⊆ Cog(C1 ⊔ C2)."""
    res = ClaimResult("cog-sandwich", HARD)
    for i in range(len(ctx.U.monoids)):
        acts = ctx.U.acts[i]
        for j, k, Pr, Co in _class_constructions(ctx, i):
            for a, A in enumerate(acts):
                by_prod = ctx.cot_mask(A, Pr) == 0
                by_class = bool(ctx.class_cogen(i, a)[j, k])
                by_coprod = ctx.cot_mask(A, Co) == 0
                if (by_prod and not by_class) or (by_class and not by_coprod):
                    res.violate(_record(i, a, ctx.U, cls=[j, k], product=by_prod, cls_cogenerates=by_class, coproduct=by_coprod))
                else:
                    res.confirm()
    return res


def claim_sandwich_cogenerator(ctx: Context) -> ClaimResult:
    """With homs between all members, cotr(∏) = cotr(𝒞) = cotr(∐)."""
    res = ClaimResult("cog-sandwich-cogenerator", REPORT)
    for i in range(len(ctx.U.monoids)):
        acts = ctx.U.acts[i]
        cot = ctx.cot_matrix(i)
        for j, k, Pr, Co in _class_constructions(ctx, i):
            linked = bool(enumerate_homs(acts[j], acts[k])) and bool(enumerate_homs(acts[k], acts[j]))
            for a, A in enumerate(acts):
                if not linked:
                    res.skip()
                    continue
                via_class = int(cot[a, j] & cot[a, k])
                via_prod = ctx.cot_mask(A, Pr)
                via_coprod = ctx.cot_mask(A, Co)
                if via_prod == via_class == via_coprod:
                    res.confirm()
                else:
                    res.violate(
                        _record(
                            i, a, ctx.U, cls=[j, k], product_equal=via_prod == via_class, coproduct_equal=via_coprod == via_class
                        )
                    )
    return res


def _min_proper_by_definition(A: Act) -> bool:
    """Some ρ(a, a'), a != a', lies below every non-diagonal congruence."""
    nondiag = [c.mask for c in all_congruences(A) if not c.is_diagonal]
    for b in range(A.size):
        for a in range(b):
            rho = principal_congruence(A, a, b).mask
            if all(rho & ~c == 0 for c in nondiag):
                return True
    return False


def claim_si_consistency(ctx: Context) -> ClaimResult:
    """Monolith test agrees with the minimum-principal-congruence definition,
    with irreducibility, and is inherited by every subact with two or more elements."""
    res = ClaimResult("si-consistency", HARD)
    for i, j, A in ctx.U.instances():
        if A.size < 2:
            res.skip()
            continue
        si = is_subdirectly_irreducible(A)
        by_def = _min_proper_by_definition(A)
        irr = is_irreducible(A)
        inherited = True
        if si:
            for B in all_subacts(A):
                if len(B) >= 2 and not is_subdirectly_irreducible(B.as_act()[0]):
                    inherited = False
        if si == by_def == irr and inherited:
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U, monolith=si, definition=by_def, irreducible=irr, inherited=inherited))
    return res


def claim_minimal_congruence(ctx: Context) -> ClaimResult:
    """Every act with two or more elements has a minimal congruence and a minimal subact."""
    res = ClaimResult("minimal-congruence-exists", HARD)
    for i, j, A in ctx.U.instances():
        if A.size < 2:
            res.skip()
        elif minimal_congruences(A) and all_subacts(A):
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U))
    return res


def claim_factor_correspondence(ctx: Context) -> ClaimResult:
    """Congruences above θ correspond bijectively and monotonically to Con(A/θ),
    and meets equal to θ become meets equal to Δ."""
    from acta.congruence import congruences_above

    res = ClaimResult("factor-correspondence", HARD)
    for i, j, A in ctx.U.instances():
        problems = []
        for theta in all_congruences(A):
            pairs = congruences_above(A, theta)
            Q, _ = factor_act(A, theta)
            bars = [bar for _, bar in pairs]
            if sorted(b.labels for b in bars) != sorted(c.labels for c in all_congruences(Q)) or len(set(bars)) != len(bars):
                problems.append({"theta": list(theta.labels), "issue": "not a bijection"})
                continue
            for (s1, b1), (s2, b2) in itertools.product(pairs, repeat=2):
                if (s1 <= s2) != (b1 <= b2):
                    problems.append({"theta": list(theta.labels), "issue": "order"})
                    break
                if (meet(s1, s2) == theta) != meet(b1, b2).is_diagonal:
                    problems.append({"theta": list(theta.labels), "issue": "meet"})
                    break
        if problems:
            res.violate(_record(i, j, ctx.U, problems=problems))
        else:
            res.confirm()
    return res


def claim_radical_embedding(ctx: Context) -> ClaimResult:
    """A/ρ_Rad embeds in ∏ A/ρ_M over the maximal subacts M, each factor θ-simple.

    A factor A/ρ_M that is not θ-simple is only accepted when A \\ M is itself
    a subact (A splits as M ⊔ (A \\ M)); such instances are logged as skipped.
    """
    res = ClaimResult("radical-embedding", HARD)
    for i, j, A in ctx.U.instances():
        rad, maximal = radical(A)
        if not maximal or rad is None:
            res.skip()
            continue
        Qr, pr = factor_act(A, rees_congruence(A, rad))
        projs = [factor_act(A, rees_congruence(A, Mx))[1] for Mx in maximal]
        image = {}
        injective = True
        for a in range(A.size):
            key = tuple(p.map[a] for p in projs)
            if key in image and image[key] != pr.map[a]:
                injective = False
            image[key] = pr.map[a]
        well_defined = len(set(image.values())) == Qr.size and len(image) == Qr.size
        split = []
        bad_factor = []
        for Mx, p in zip(maximal, projs):
            if is_theta_simple(p.target):
                continue
            rest = [a for a in range(A.size) if a not in Mx]
            (split if is_subact(A, rest) else bad_factor).append(list(Mx.elements))
        if not (injective and well_defined) or bad_factor:
            res.violate(_record(i, j, ctx.U, injective=injective and well_defined, non_theta_simple=bad_factor))
        elif split:
            res.skip(note=_record(i, j, ctx.U, split_maximal=split))
        else:
            res.confirm()
    return res


def claim_birkhoff(ctx: Context) -> ClaimResult:
    """The subdirect decomposition meets to Δ and every factor is subdirectly irreducible."""
    res = ClaimResult("birkhoff", HARD)
    for i, j, A in ctx.U.instances():
        if A.size < 2:
            res.skip()
            continue
        dec = subdirect_decomposition(A)
        thetas = [th for th, _ in dec.factors]
        ok_meet = meet_all(thetas).is_diagonal
        ok_si = all(monolith(Q) is not None for _, Q in dec.factors)
        if ok_meet and ok_si and dec.meet_is_diagonal and dec.all_subdirectly_irreducible:
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U, meet_diagonal=ok_meet, all_si=ok_si))
    return res


def claim_socle_large(ctx: Context) -> ClaimResult:
    """Finite acts are finitely cogenerated, so Soc(A) is predicted non-empty and large."""
    res = ClaimResult("socle-large", REPORT)
    for i, j, A in ctx.U.instances():
        soc = socle(A)
        if soc is None:
            res.violate(_record(i, j, ctx.U, socle=None))
        elif is_large(soc, A):
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U, socle=list(soc.elements), large=False))
    return res


def essential_by_factors(h: Hom) -> bool:
    """Every g with g∘h injective is injective, checked on the quotient maps of the target."""
    for theta in all_congruences(h.target):
        _, pi = factor_act(h.target, theta)
        if not theta.is_diagonal and pi.compose(h).is_injective:
            return False
    return True


def claim_essential_mono(ctx: Context) -> ClaimResult:
    """Image-largeness agrees with essentiality tested against all quotient maps."""
    res = ClaimResult("essential-mono", HARD)
    for i, j, A in ctx.U.instances():
        mismatches = []
        for B in all_subacts(A):
            _, inc = B.as_act()
            if is_essential_mono(inc) != essential_by_factors(inc):
                mismatches.append(list(B.elements))
        if mismatches:
            res.violate(_record(i, j, ctx.U, subacts=mismatches))
        else:
            res.confirm()
    return res


def _min_power_embedding(A: Act) -> int | None:
    """Least n such that some p in A^n has injective λ_p, by search over A^n."""
    for n in range(1, A.size + 1):
        P, _ = product([A] * n)
        rows = np.sort(P.action, axis=1)
        if (np.diff(rows, axis=1) != 0).all(axis=1).any():
            return n
    return None


def claim_cofaithful_embedding(ctx: Context) -> ClaimResult:
    """A finite witness set with R_S(B) = Δ exists iff S_S embeds in some A^n, with the same least n."""
    res = ClaimResult("cofaithful-embedding", HARD)
    for i, j, A in ctx.U.instances():
        w = cofaithful_witness(A)
        n = _min_power_embedding(A)
        ok = (w is None) == (n is None)
        if ok and w is not None:
            ok = w.n == n and w.embedding.is_injective and w.embedding.is_hom()
        if ok:
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U, witness_n=w.n if w else None, search_n=n))
    return res


def claim_cofaithful_faithful_subact(ctx: Context) -> ClaimResult:
    """Cofaithful ⟹ a finitely generated faithful subact; conversely for commutative S."""
    res = ClaimResult("cofaithful-faithful-subact", HARD)
    for i, j, A in ctx.U.instances():
        w = cofaithful_witness(A)
        forward = True
        if w is not None:
            forward = is_faithful(subact_closure(A, w.subset).as_act()[0])
        converse = True
        if A.monoid.is_commutative():
            has_faithful_sub = any(is_faithful(B.as_act()[0]) for B in all_subacts(A))
            converse = (not has_faithful_sub) or w is not None
        elif w is None:
            res.skip()
            continue
        if forward and converse:
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U, forward=forward, converse=converse))
    return res


def claim_irreducible_regular(ctx: Context) -> ClaimResult:
    """S_S irreducible ⟹ every cofaithful act is a subgenerator."""
    res = ClaimResult("irreducible-regular-cofaithful", HARD)
    for i, M in enumerate(ctx.U.monoids):
        irr = is_irreducible(ctx.regular(i))
        for j, A in enumerate(ctx.U.acts[i]):
            if not irr:
                res.skip()
            elif cofaithful_witness(A) is None or subgenerator_witness(A) is not None:
                res.confirm()
            else:
                res.violate(_record(i, j, ctx.U))
    return res


def claim_irreducible_regular_converse(ctx: Context) -> ClaimResult:
    """Commutative S whose cofaithful universe acts are all subgenerators has S_S irreducible.

    Universe-relative: a separating act may lie beyond the size bound.
    """
    res = ClaimResult("irreducible-regular-converse", REPORT)
    for i, M in enumerate(ctx.U.monoids):
        if M.size < 2 or not M.is_commutative():
            res.skip()
            continue
        all_sub = all(cofaithful_witness(A) is None or subgenerator_witness(A) is not None for A in ctx.U.acts[i])
        if all_sub and not is_irreducible(ctx.regular(i)):
            res.violate(_record(i, None, ctx.U, regular_irreducible=False))
        else:
            res.confirm()
    return res


def claim_faithful_is_cofaithful(ctx: Context) -> ClaimResult:
    """On finite acts every faithful act is cofaithful."""
    res = ClaimResult("faithful-is-cofaithful", HARD)
    for i, j, A in ctx.U.instances():
        if is_faithful(A) and cofaithful_witness(A) is None:
            res.violate(_record(i, j, ctx.U))
        else:
            res.confirm()
    return res


def _splits(U: Act, comp: Subact) -> bool:
    els = comp.elements
    for r in range(1, len(els)):
        for left in itertools.combinations(els, r):
            right = [x for x in els if x not in left]
            if is_subact(U, left) and is_subact(U, right):
                return True
    return False


def claim_indecomposable_decomposition(ctx: Context) -> ClaimResult:
    """Components are disjoint, cover A, and none splits further."""
    res = ClaimResult("indecomposable-decomposition", HARD)
    for i, j, A in ctx.U.instances():
        comps = decompose_indecomposable(A)
        flat = [a for C in comps for a in C.elements]
        ok = sorted(flat) == list(range(A.size)) and all(is_subact(A, C.elements) for C in comps)
        ok = ok and not any(_splits(A, C) for C in comps)
        if ok:
            res.confirm()
        else:
            res.violate(_record(i, j, ctx.U, components=[list(C.elements) for C in comps]))
    return res


CLAIMS: dict[str, Callable[[Context], ClaimResult]] = {
    "chain": claim_chain,
    "faithful-cogenerates-regular": claim_faithful_cogenerates_regular,
    "faithful-cogenerates-projectives": claim_faithful_cogenerates_projectives,
    "cotrace-least": claim_cotrace_least,
    "cotrace-minimality": claim_cotrace_minimality,
    "cotrace-monotone": claim_cotrace_monotone,
    "cog-subobject-closure": claim_subobject_closure,
    "cog-product-closure": claim_product_closure,
    "cog-sandwich": claim_sandwich,
    "cog-sandwich-cogenerator": claim_sandwich_cogenerator,
    "si-consistency": claim_si_consistency,
    "minimal-congruence-exists": claim_minimal_congruence,
    "factor-correspondence": claim_factor_correspondence,
    "radical-embedding": claim_radical_embedding,
    "birkhoff": claim_birkhoff,
    "socle-large": claim_socle_large,
    "essential-mono": claim_essential_mono,
    "cofaithful-embedding": claim_cofaithful_embedding,
    "cofaithful-faithful-subact": claim_cofaithful_faithful_subact,
    "irreducible-regular-cofaithful": claim_irreducible_regular,
    "irreducible-regular-converse": claim_irreducible_regular_converse,
    "faithful-is-cofaithful": claim_faithful_is_cofaithful,
    "indecomposable-decomposition": claim_indecomposable_decomposition,
}


def run_claims(
    U: Universe, claims: list[str] | None = None, ctx: Context | None = None, jobs: int = 1
) -> list[ClaimResult]:
    """Evaluate the selected claims; results come back in selection order."""
    names = list(CLAIMS) if claims is None else claims
    unknown = [c for c in names if c not in CLAIMS]
    if unknown:
        raise KeyError(f"unknown claims: {unknown}")
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs, initializer=_worker_init, initargs=(U.monoid_bound, U.act_bound, U.named)) as pool:
            return list(pool.map(_worker_run, names))
    ctx = ctx or Context(U)
    return [CLAIMS[name](ctx) for name in names]


_WORKER_CTX: Context | None = None


def _worker_init(max_monoid: int, max_act: int, named: bool) -> None:
    global _WORKER_CTX
    _WORKER_CTX = Context(build_universe(max_monoid, max_act, named))


def _worker_run(name: str) -> ClaimResult:
    return CLAIMS[name](_WORKER_CTX)


# --------------------------------------------------------------------------
# counterexamples to the converses of the chain

GAPS: dict[str, Callable[[Act], bool]] = {
    "cofaithful-not-subgenerator": lambda A: cofaithful_witness(A) is not None and subgenerator_witness(A) is None,
    "subgenerator-not-generator": lambda A: subgenerator_witness(A) is not None and not is_generator(A),
    "faithful-not-cofaithful": lambda A: is_faithful(A) and cofaithful_witness(A) is None,
}


def find_counterexample(gap: str, max_monoid: int = 4, max_act: int = 4, universe: Universe | None = None) -> dict | None:
    """Smallest act (monoid order, act size, then tables) with the property ``gap``."""
    if gap not in GAPS:
        raise KeyError(f"unknown gap {gap!r}; choose from {sorted(GAPS)}")
    U = universe or build_universe(max_monoid, max_act)
    order = sorted(
        U.instances(),
        key=lambda t: (U.monoids[t[0]].size, t[2].size, t[0], tuple(t[2].action.ravel())),
    )
    pred = GAPS[gap]
    for i, j, A in order:
        if pred(A):
            M = U.monoids[i]
            return {
                "gap": gap,
                "monoid": M.table.tolist(),
                "monoid_names": list(M.names) if M.names else None,
                "action": A.action.tolist(),
            }
    return None


def gap_summary(U: Universe) -> list[dict]:
    """Witness search for each strict gap, with a note when none can exist at finite scale."""
    out = []
    for gap in GAPS:
        w = find_counterexample(gap, universe=U)
        entry = {"gap": gap, "witness": w}
        if gap == "faithful-not-cofaithful":
            entry["note"] = "absent on every finite act: a faithful A satisfies R_S(A) = Δ, so B = A is a finite witness"
        elif w is None:
            entry["note"] = "no witness within the universe bounds"
        out.append(entry)
    return out


def universe_report(U: Universe, claims: list[str] | None = None, gaps: bool = True, jobs: int = 1) -> dict:
    results = run_claims(U, claims, jobs=jobs)
    universe = dict(U.summary(), monoid_tables=[_enc_monoid(M) for M in U.monoids])
    report = {"universe": universe, "claims": [r.to_json() for r in results]}
    if gaps:
        report["gaps"] = gap_summary(U)
    report["hard_violations"] = sum(len(r.violations) for r in results if r.mode == HARD)
    return report
