from __future__ import annotations

import dataclasses

import pytest

from fusionscope.alperin import AlperinFactorization, AlperinStep, admissible, alperin_decompose, verify_factorization
from fusionscope.catalog import CATALOG, build_text
from fusionscope.errors import NotAFusionMorphism
from fusionscope.fusion import fusion_system
from fusionscope.group import Morphism, conjugation
from fusionscope.perm import from_cycles
from fusionscope.subgroups import centralizer, prime_factors, transporter

SMALL = [t for t in CATALOG if build_text(t).order <= 48]


def test_conjugation_by_sylow_element_is_one_step_through_s():
    F = fusion_system(build_text("S(4)"), 2)
    S = F.sylow
    for s in S.members[1:]:
        m = conjugation(S, s)
        if m.images == S.members:
            continue
        fac = alperin_decompose(F, m)
        assert len(fac.steps) == 1 and fac.steps[0].R == S
        assert verify_factorization(F, fac)


def test_sigma4_klein_four_step():
    G = build_text("S(4)")
    F = fusion_system(G, 2)
    a = G.index(from_cycles([(0, 1), (2, 3)], 4))
    b = G.index(from_cycles([(0, 2), (1, 3)], 4))
    P = G.generate([a])
    g = G.index(from_cycles([(1, 2)], 4))
    assert int(G.conj(g, a)) == b
    fac = alperin_decompose(F, conjugation(P, g, F.sylow))
    assert verify_factorization(F, fac)
    assert len(fac.steps) == 1
    (step,) = fac.steps
    assert step.R.order == 4 and F.is_essential(step.R)
    assert [Q.members for Q in fac.intermediates] == [P.members, G.generate([b]).members]


def test_not_a_fusion_morphism():
    G = build_text("Z(6)")
    F = fusion_system(G, 3)
    P = F.sylow
    swap = tuple(int(G.power(y, 2)) for y in P.members)
    assert swap != P.members
    with pytest.raises(NotAFusionMorphism):
        alperin_decompose(F, (P, swap))
    with pytest.raises(NotAFusionMorphism):
        alperin_decompose(F, Morphism(P, F.sylow, swap))


def test_identity_step_breaks_verification():
    G = build_text("S(4)")
    F = fusion_system(G, 2)
    for P in F.objects:
        for f in F.hom_to_sylow(P):
            fac = alperin_decompose(F, f)
            for i, step in enumerate(fac.steps):
                if step.phi.images == step.R.members:
                    continue
                ident = Morphism(step.R, step.R, step.R.members)
                steps = list(fac.steps)
                steps[i] = AlperinStep(step.R, ident)
                broken = dataclasses.replace(fac, steps=tuple(steps))
                assert not verify_factorization(F, broken)


def test_empty_factorization_of_inclusion():
    F = fusion_system(build_text("S(4)"), 2)
    for P in F.objects:
        fac = alperin_decompose(F, Morphism(P, F.sylow, P.members))
        assert fac.steps == ()
        assert verify_factorization(F, AlperinFactorization(P, P.members, ()))


def test_non_admissible_subgroup_rejected():
    F = fusion_system(build_text("S(4)"), 2)
    S = F.sylow
    bad = [P for P in F.objects if P != S and P not in F.essentials]
    R = bad[-1]
    ident = Morphism(R, R, R.members)
    assert not verify_factorization(F, AlperinFactorization(R, R.members, (AlperinStep(R, ident),)))


def test_round_trip_over_catalog():
    for text in CATALOG:
        G = build_text(text)
        for p in prime_factors(G.order):
            F = fusion_system(G, p)
            if F.sylow.order > 64:
                continue
            allowed = {R.members for R in admissible(F)}
            for P in F.objects:
                for f in F.hom_to_sylow(P):
                    fac = alperin_decompose(F, f)
                    assert verify_factorization(F, fac), (text, p)
                    assert all(s.R.members in allowed for s in fac.steps)


def test_admissible_soundness():
    for text in SMALL:
        G = build_text(text)
        for p in prime_factors(G.order):
            F = fusion_system(G, p)
            R0, *rest = admissible(F)
            assert R0 == F.sylow
            for R in rest:
                assert F.is_essential(R) and F.is_fully_normalized(R)


def test_sigma4_morphism_count():
    G = build_text("S(4)")
    F = fusion_system(G, 2)
    S = F.sylow
    expected = 0
    for P in F.objects:
        expected += sum(len(transporter(G, P, Q)) // centralizer(G, P).order
                        for Q in F.objects if Q.order == P.order)
    total = 0
    for P in F.objects:
        for Q in F.objects:
            if Q.order != P.order:
                continue
            for f in F.hom_to_sylow(P):
                if sorted(f.images) == list(Q.members):
                    assert verify_factorization(F, alperin_decompose(F, f))
                    total += 1
    assert total == expected
    assert sum(len(F.hom_to_sylow(P)) for P in F.objects) == sum(
        len(transporter(G, P, S)) // centralizer(G, P).order for P in F.objects)


def test_json_shape():
    F = fusion_system(build_text("S(4)"), 2)
    f = F.hom_to_sylow(F.objects[1])[-1]
    doc = alperin_decompose(F, f).to_json()
    assert sorted(doc) == ["source", "steps", "target"]
    for step in doc["steps"]:
        assert sorted(step) == ["R", "phi"] and len(step["phi"]) == len(step["R"])


def test_decomposition_is_deterministic():
    F1 = fusion_system(build_text("D(12)"), 2)
    F2 = fusion_system(build_text("D(12)"), 2)
    for P1, P2 in zip(F1.objects, F2.objects):
        for f1, f2 in zip(F1.hom_to_sylow(P1), F2.hom_to_sylow(P2)):
            assert alperin_decompose(F1, f1).to_json() == alperin_decompose(F2, f2).to_json()
