"""Large subacts, socles, radicals and simplicity."""

from __future__ import annotations

from dataclasses import dataclass

from acta.act import Act, Hom, Subact, all_subacts, as_subact, decompose_indecomposable
from acta.congruence import all_congruences, rees_congruence
from acta.errors import NonZeroRequired, NoZero, NotInjective


def is_large(B: Subact, A: Act) -> bool:
    """B ⊆' A: every non-diagonal congruence meets ρ_B non-diagonally."""
    B = as_subact(A, B)
    rees = rees_congruence(A, B).mask
    return all(theta.mask & rees for theta in all_congruences(A) if not theta.is_diagonal)


def zero_point(A: Act) -> int:
    """The zero Θ of ``A``; requires a monoid zero and a unique fixed point."""
    if A.monoid.zero is None:
        raise NoZero("the monoid has no zero")
    fixed = A.fixed_points
    if len(fixed) != 1:
        raise NoZero(f"the act has {len(fixed)} fixed points, not a unique zero")
    return fixed[0]


def is_intersection_large(B: Subact, A: Act) -> bool:
    """B ∩ C ≠ Θ for every non-zero subact C."""
    theta = zero_point(A)
    B = as_subact(A, B)
    if B.elements == (theta,):
        raise NonZeroRequired("B must be a non-zero subact")
    bset = set(B.elements)
    # Θ lies in every subact, so "≠ Θ" means "more than Θ"
    return all(len(bset & set(C.elements)) > 1 for C in all_subacts(A) if C.elements != (theta,))


def _act_of(B) -> Act:
    return B.as_act()[0] if isinstance(B, Subact) else B


def is_simple(B) -> bool:
    """No subacts other than itself."""
    return len(all_subacts(_act_of(B))) == 1


def is_theta_simple(B) -> bool:
    """No subacts other than itself and a single one-element subact Θ."""
    X = _act_of(B)
    if not X.fixed_points:
        return False
    proper = [C for C in all_subacts(X) if len(C) < X.size]
    return len(proper) <= 1 and all(len(C) == 1 for C in proper)


def _intersection(subs: list[Subact], A: Act) -> Subact | None:
    common = set(range(A.size))
    for S in subs:
        common &= set(S.elements)
    return Subact(A, tuple(common)) if common else None


def large_subacts(A: Act) -> list[Subact]:
    return [B for B in all_subacts(A) if is_large(B, A)]


def socle(A: Act) -> Subact | None:
    """Soc(A): intersection of the large subacts; None when that is empty."""
    return _intersection(large_subacts(A), A)


def theta_simple_subacts(A: Act) -> list[Subact]:
    return [B for B in all_subacts(A) if is_theta_simple(B)]


def s_socle(A: Act) -> Subact:
    """S(A): union of the θ-simple subacts (monoid with zero only)."""
    zero_point(A)
    union: set[int] = set()
    for B in theta_simple_subacts(A):
        union |= set(B.elements)
    return Subact(A, tuple(union))


def maximal_subacts(A: Act) -> list[Subact]:
    """Subacts maximal among the proper ones."""
    proper = [B for B in all_subacts(A) if len(B) < A.size]
    return [B for B in proper if not any(B != C and B.issubset(C) for C in proper)]


def radical(A: Act) -> tuple[Subact | None, list[Subact]]:
    """Rad(A) and the maximal subacts it is cut from.

    Rad(A) = A when there are no maximal subacts; None when they meet in ∅.
    """
    maximal = maximal_subacts(A)
    if not maximal:
        return Subact(A, tuple(range(A.size))), []
    return _intersection(maximal, A), maximal


def is_completely_reducible(A: Act) -> bool:
    return all(is_simple(C) for C in decompose_indecomposable(A))


def is_essential_mono(h: Hom) -> bool:
    """Decided as largeness of the image in the target."""
    if not h.is_injective:
        raise NotInjective("essentiality is defined for monomorphisms")
    return is_large(h.image(), h.target)


@dataclass(frozen=True)
class StructureReport:
    act: Act
    socle: Subact | None
    s_socle: Subact | None
    radical: Subact | None
    maximal_subacts: tuple[Subact, ...]
    large_subacts: tuple[Subact, ...]
    theta_simple_subacts: tuple[Subact, ...]

    def __post_init__(self):
        if self.s_socle is not None and self.socle is not None:
            assert set(self.s_socle.elements) <= set(self.socle.elements), "S(A) must lie in Soc(A)"

    def to_json(self, names: bool = False) -> dict:
        def enc(B):
            if B is None:
                return None
            return [self.act.name(a) for a in B.elements] if names else list(B.elements)

        return {
            "socle": enc(self.socle),
            "s_socle": enc(self.s_socle),
            "radical": enc(self.radical),
            "maximal_subacts": [enc(B) for B in self.maximal_subacts],
            "large_subacts": [enc(B) for B in self.large_subacts],
            "theta_simple_subacts": [enc(B) for B in self.theta_simple_subacts],
        }


def structure_report(A: Act) -> StructureReport:
    try:
        ss = s_socle(A)
    except NoZero:
        ss = None
    rad, maximal = radical(A)
    return StructureReport(
        act=A,
        socle=socle(A),
        s_socle=ss,
        radical=rad,
        maximal_subacts=tuple(maximal),
        large_subacts=tuple(large_subacts(A)),
        theta_simple_subacts=tuple(theta_simple_subacts(A)),
    )
