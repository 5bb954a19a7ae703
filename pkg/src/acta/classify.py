"""Faithfulness, cofaithfulness, subgenerators and the other classification predicates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from acta.act import Act, Hom, Subact, as_subact, product, regular_act
from acta.cogen import is_generator
from acta.congruence import Congruence, all_congruences, canonical_labels, meet_all, monolith, rees_congruence
from acta.errors import ChainViolation, EmptySubset, FamilyMeetNotDiagonal


def annihilator_kernel(A: Act, a: int) -> Congruence:
    """ker λ_a on S_S, where λ_a(s) = a·s."""
    return Congruence(regular_act(A.monoid), canonical_labels(A.action[a]))


def right_annihilator(A: Act, subset: Iterable[int] | None = None) -> Congruence:
    """R_S(B) = {(s, t) | bs = bt for all b in B}, a congruence on S_S."""
    els = range(A.size) if subset is None else sorted({int(x) for x in subset})
    if not els:
        raise EmptySubset("right annihilator of the empty set is not defined here")
    return meet_all([annihilator_kernel(A, a) for a in els])


def is_faithful(A: Act) -> bool:
    return right_annihilator(A).is_diagonal


@dataclass(frozen=True)
class CofaithfulWitness:
    subset: tuple[int, ...]
    embedding: Hom  # S_S -> A^n, s ↦ (a_1 s, ..., a_n s)

    @property
    def n(self) -> int:
        return len(self.subset)


def cofaithful_witness(A: Act) -> CofaithfulWitness | None:
    """A smallest B ⊆ A with R_S(B) = Δ (lexicographically first), and S ↪ A^n."""
    if not is_faithful(A):
        return None
    kers = [annihilator_kernel(A, a).mask for a in range(A.size)]
    for k in range(1, A.size + 1):
        for combo in itertools.combinations(range(A.size), k):
            acc = -1
            for a in combo:
                acc &= kers[a]
            if acc == 0:
                P, _ = product([A] * k)
                S = regular_act(A.monoid)
                images = [tuple(int(A.action[a, s]) for a in combo) for s in range(S.size)]
                idx = [_ravel(img, A.size) for img in images]
                emb = Hom(S, P, tuple(idx))
                assert emb.is_injective and emb.is_hom()
                return CofaithfulWitness(combo, emb)
    raise AssertionError("faithful act without a witness subset")  # pragma: no cover


def _ravel(coords: Sequence[int], base: int) -> int:
    out = 0
    for c in coords:
        out = out * base + c
    return out


def is_cofaithful(A: Act) -> bool:
    return cofaithful_witness(A) is not None


def subgenerator_witness(A: Act) -> int | None:
    """Least a with ker λ_a = Δ (S_S embeds in A via λ_a)."""
    for a in range(A.size):
        if annihilator_kernel(A, a).is_diagonal:
            return a
    return None


def is_subgenerator(A: Act) -> bool:
    return subgenerator_witness(A) is not None


def is_subdirectly_irreducible(A: Act) -> bool:
    return A.size >= 2 and monolith(A) is not None


def is_irreducible(A: Act) -> bool:
    """Pairwise meets of non-diagonal congruences stay non-diagonal."""
    if A.size < 2:
        return False
    nondiag = [c.mask for c in all_congruences(A) if not c.is_diagonal]
    return all(x & y for x, y in itertools.combinations(nondiag, 2))


@dataclass(frozen=True)
class FiniteCheck:
    holds: bool
    subfamily: tuple | None
    trivial: bool


def finitely_cogenerated_check(A: Act, family: Sequence[Congruence] | None = None) -> FiniteCheck:
    """For finite acts the property always holds; with a family, extract a smallest subfamily meeting to Δ."""
    if family is None:
        return FiniteCheck(True, None, trivial=True)
    family = list(family)
    if not family or not meet_all(family).is_diagonal:
        raise FamilyMeetNotDiagonal("the family does not meet to Δ")
    masks = [c.mask for c in family]
    for k in range(1, len(family) + 1):
        for combo in itertools.combinations(range(len(family)), k):
            acc = -1
            for i in combo:
                acc &= masks[i]
            if acc == 0:
                return FiniteCheck(True, tuple(family[i] for i in combo), trivial=False)
    raise AssertionError("unreachable")  # pragma: no cover


def finitely_rees_cogenerated_check(A: Act, subact_family: Sequence[Subact | Iterable[int]] | None = None) -> FiniteCheck:
    """Subact form: from a family with |∩ B_i| <= 1 extract a smallest subfamily with the same property."""
    if subact_family is None:
        return FiniteCheck(True, None, trivial=True)
    subs = [as_subact(A, B) for B in subact_family]
    if not subs:
        raise FamilyMeetNotDiagonal("empty family")

    def small(combo) -> bool:
        common = set(range(A.size))
        for B in combo:
            common &= set(B.elements)
        return len(common) <= 1

    if not small(subs):
        raise FamilyMeetNotDiagonal("the Rees congruences of the family do not meet to Δ")
    for k in range(1, len(subs) + 1):
        for combo in itertools.combinations(subs, k):
            if small(combo):
                return FiniteCheck(True, tuple(combo), trivial=False)
    raise AssertionError("unreachable")  # pragma: no cover


def rees_family(A: Act, subacts: Sequence[Subact]) -> list[Congruence]:
    return [rees_congruence(A, B) for B in subacts]


@dataclass(frozen=True)
class Classification:
    faithful: bool
    cofaithful: tuple[int, ...] | None
    cofaithful_n: int | None
    subgenerator: int | None
    generator: bool
    subdirectly_irreducible: bool
    irreducible: bool
    finitely_cogenerated: bool
    finitely_cogenerated_trivial: bool
    finitely_rees_cogenerated: bool
    finitely_rees_cogenerated_trivial: bool

    def chain(self) -> tuple[bool, bool, bool, bool]:
        """(generator, subgenerator, cofaithful, faithful)."""
        return (self.generator, self.subgenerator is not None, self.cofaithful is not None, self.faithful)

    def to_json(self) -> dict:
        return {
            "faithful": self.faithful,
            "cofaithful": list(self.cofaithful) if self.cofaithful is not None else None,
            "cofaithful_n": self.cofaithful_n,
            "subgenerator": self.subgenerator,
            "generator": self.generator,
            "subdirectly_irreducible": self.subdirectly_irreducible,
            "irreducible": self.irreducible,
            "finitely_cogenerated": self.finitely_cogenerated,
            "finitely_cogenerated_trivial": self.finitely_cogenerated_trivial,
            "finitely_rees_cogenerated": self.finitely_rees_cogenerated,
            "finitely_rees_cogenerated_trivial": self.finitely_rees_cogenerated_trivial,
        }


def check_chain(gen: bool, subgen: bool, cofaithful: bool, faithful: bool) -> str | None:
    """Describe the first broken link of generator ⟹ subgenerator ⟹ cofaithful ⟹ faithful."""
    if gen and not subgen:
        return "generator but not subgenerator"
    if subgen and not cofaithful:
        return "subgenerator but not cofaithful"
    if cofaithful and not faithful:
        return "cofaithful but not faithful"
    return None


def classification_report(A: Act) -> Classification:
    cw = cofaithful_witness(A)
    fc = finitely_cogenerated_check(A)
    frc = finitely_rees_cogenerated_check(A)
    out = Classification(
        faithful=is_faithful(A),
        cofaithful=cw.subset if cw else None,
        cofaithful_n=cw.n if cw else None,
        subgenerator=subgenerator_witness(A),
        generator=is_generator(A),
        subdirectly_irreducible=is_subdirectly_irreducible(A),
        irreducible=is_irreducible(A),
        finitely_cogenerated=fc.holds,
        finitely_cogenerated_trivial=fc.trivial,
        finitely_rees_cogenerated=frc.holds,
        finitely_rees_cogenerated_trivial=frc.trivial,
    )
    broken = check_chain(*out.chain())
    if broken:
        raise ChainViolation(broken)
    return out
