from __future__ import annotations

import oracles
from fusionscope.catalog import CATALOG, build_text
from fusionscope.fusion import (
    automizer,
    diagram,
    essential_subsystem,
    fusion_system,
    has_strongly_p_embedded,
    hom_G,
    outer_automizer,
    strongly_p_embedded,
)
from fusionscope.isomorphism import are_isomorphic, type_label
from fusionscope.subgroups import all_subgroups, centralizer, normalizer, prime_factors, sylow, transporter

SMALL = [t for t in CATALOG if build_text(t).order <= 48]


def systems(max_sylow=64):
    for text in SMALL:
        G = build_text(text)
        for p in prime_factors(G.order):
            F = fusion_system(G, p)
            if F.sylow.order <= max_sylow:
                yield text, F


def test_sigma4_fusion_system():
    F = fusion_system(build_text("S(4)"), 2)
    assert len(F.objects) == 10
    assert len(F.classes) == 7
    assert sorted(c.size for c in F.classes) == sorted([1, 2, 3, 1, 1, 1, 1])
    assert [c.size for c in F.classes if c.order == 2] == [2, 3]
    assert type_label(F.aut(F.sylow)) == "Z/2xZ/2"
    assert len(F.essential_classes) == 1
    (E,) = F.essentials
    assert E.order == 4 and type_label(F.aut(E)) == "S3"


def test_sylow_of_sigma4_alone():
    S = sylow(build_text("S(4)"), 2).as_group()
    F = fusion_system(S, 2)
    assert len(F.classes) == 8
    singles = [c for c in F.classes if c.order == 2 and c.size == 1]
    assert len(singles) == 1
    assert F.essentials == []


def test_trivial_sylow():
    F = fusion_system(build_text("Z(3)"), 2)
    assert len(F.objects) == 1 and len(F.classes) == 1
    D = diagram(F)
    assert len(D.nodes) == 1 and D.inclusions == [] and D.conjugations == []


def test_automizer_examples():
    G = build_text("D(10)")
    S = sylow(G, 5)
    assert automizer(G, S).order == 2
    H = build_text("AGL(1,5)")
    R = sylow(H, 5)
    A = automizer(H, R)
    assert A.order == 4 and type_label(A) == "Z/4"


def test_outer_equals_automizer_for_abelian_subgroups():
    F = fusion_system(build_text("S(4)"), 2)
    for P in F.objects:
        if P.as_group().is_abelian:
            assert F.out(P).order == F.aut(P).order
    G = build_text("S(4)")
    S = sylow(G, 2)
    # N_G(S) = S and C_G(S) = Z(S), so every automorphism is inner
    assert automizer(G, S).order == 4
    assert outer_automizer(G, S).order == 1


def test_hom_counts_orbit_stabilizer():
    for text, F in systems(16):
        G = F.ambient
        for P in F.objects:
            cp = centralizer(G, P).order
            for Q in F.objects:
                homs = hom_G(G, P, Q)
                assert len(homs) == len(transporter(G, P, Q)) // cp
                assert len({f.images for f in homs}) == len(homs)


def test_hom_counts_brute_force_sigma4():
    G = build_text("S(4)")
    F = fusion_system(G, 2)
    elems = oracles.elements(G)
    for P in F.objects:
        Pp = sorted(G.element(x) for x in P)
        for Q in F.objects:
            Qp = [G.element(x) for x in Q]
            maps = {tuple(oracles.conj(g, x) for x in Pp) for g in oracles.transporter(elems, Pp, Qp)}
            assert len(hom_G(G, P, Q)) == len(maps)


def test_witnesses_realise_maps():
    F = fusion_system(build_text("S(4)"), 2)
    grp = F.group
    for P in F.objects:
        for f in F.hom_to_sylow(P):
            assert f.images == tuple(int(grp.conj(f.witness, x)) for x in P.members)
            assert f.is_homomorphism() and f.is_injective()


def test_abelian_group_only_inclusions():
    G = build_text("Z(2)xZ(4)")
    F = fusion_system(G, 2)
    for P in F.objects:
        for Q in F.objects:
            homs = hom_G(G, P, Q)
            if P.issubset(Q):
                assert [f.images for f in homs] == [P.members]
            else:
                assert homs == []


def test_identity_in_every_automizer():
    for text, F in systems(16):
        for P in F.objects:
            assert P.members in {f.images for f in F.automizer_maps(P)}


def test_category_laws():
    for text in ["S(4)", "A(4)", "D(12)", "S(3)xS(3)", "Dic(12)xZ(2)"]:
        G = build_text(text)
        for p in prime_factors(G.order):
            F = fusion_system(G, p)
            objs = F.objects
            homs = {(P.members, Q.members): {f.images: f for f in hom_G(G, P, Q)} for P in objs for Q in objs}
            for P in objs:
                for Q in objs:
                    for f in homs[(P.members, Q.members)].values():
                        for R in objs:
                            for g in homs[(Q.members, R.members)].values():
                                assert g.compose(f).images in homs[(P.members, R.members)]


def test_morphism_factors_as_conjugation_then_inclusion():
    F = fusion_system(build_text("S(4)"), 2)
    for P in F.objects:
        for f in F.hom_to_sylow(P):
            image = f.image()
            onto = [h for h in hom_G(F.ambient, P, image) if h.images == f.images]
            assert len(onto) == 1 and sorted(onto[0].images) == list(image.members)


def test_class_sizes_sum_to_object_count():
    for text, F in systems():
        assert sum(c.size for c in F.classes) == len(F.objects)


def test_conjugate_objects_have_isomorphic_automizers():
    for text, F in systems(16):
        for c in F.classes:
            A = F.aut(c.members[0])
            for Q in c.members[1:]:
                assert are_isomorphic(A, F.aut(Q))


def test_classes_against_brute_force_conjugation():
    for text in ["S(4)", "D(12)", "A(4)xZ(2)"]:
        G = build_text(text)
        F = fusion_system(G, 2)
        elems = oracles.elements(G)
        S = frozenset(G.element(x) for x in F.sylow)
        for c in F.classes:
            P = [G.element(x) for x in c.representative]
            conjugates = {frozenset(oracles.conj(g, x) for x in P) for g in elems}
            inside = {Q for Q in conjugates if Q <= S}
            assert inside == {frozenset(G.element(x) for x in Q) for Q in c.members}


def test_centric_examples():
    G = build_text("S(4)")
    F = fusion_system(G, 2)
    S = F.sylow
    assert F.is_centric(S)
    V = [P for P in F.objects if P.order == 4 and P.is_normal_in(G.whole)][0]
    assert F.is_centric(V)
    transposition = [P for P in F.objects if P.order == 2 and F.class_index(P) == 1][0]
    assert G.format(transposition.members[1]).count("(") == 1
    assert not F.is_centric(transposition)


def test_centric_against_definition():
    for text, F in systems(16):
        G = F.ambient
        for P in F.objects:
            ok = True
            for g in G.members:
                Q = P.conjugate(g)
                if Q.issubset(F.sylow):
                    Z = centralizer(Q, Q)
                    ok &= centralizer(F.sylow, Q) == Z
            assert F.is_centric(P) == ok


def test_fully_normalized():
    for text, F in systems():
        assert F.is_fully_normalized(F.sylow)
        for P in F.objects:
            if P.is_normal_in(F.sylow):
                assert F.is_fully_normalized(P)
        for c in F.classes:
            assert any(F.is_fully_normalized(Q) for Q in c.members)
            assert F.is_fully_normalized(c.representative)
            best = max(normalizer(F.sylow, Q).order for Q in c.members)
            assert normalizer(F.sylow, c.representative).order == best


def brute_strongly_embedded(H, p):
    """Literal definition: some proper K, p | |K|, containing a Sylow p-subgroup."""
    H = H.whole
    target = oracles.p_part(H.order, p)
    for K in all_subgroups(H):
        if K.order == H.order or K.order % p or oracles.p_part(K.order, p) != target:
            continue
        if all(K.intersection(K.conjugate(h)).order % p for h in H.members if h not in K):
            return True
    return False


def test_strongly_p_embedded_examples():
    S3 = build_text("S(3)")
    K = strongly_p_embedded(S3, 2)
    assert K is not None and K.order == 2
    assert not has_strongly_p_embedded(S3, 3)
    assert not has_strongly_p_embedded(build_text("Z(5)"), 2)


def test_strongly_p_embedded_against_definition():
    for text in SMALL:
        G = build_text(text)
        for p in prime_factors(G.order) + [7]:
            assert has_strongly_p_embedded(G, p) == brute_strongly_embedded(G, p), (text, p)


def test_essential_examples():
    assert len(fusion_system(build_text("S(4)"), 2).essential_classes) == 1
    for text in ["D(8)", "Dic(16)", "Z(2)xZ(4)", "D(8)xZ(2)"]:
        assert fusion_system(build_text(text), 2).essentials == []
    for text in ["A(4)", "Dic(12)", "AGL(1,5)", "A(5)"]:
        G = build_text(text)
        for p in prime_factors(G.order):
            F = fusion_system(G, p)
            if F.sylow.as_group().is_abelian:
                assert F.essentials == []


def test_essentials_against_definition():
    for text, F in systems(16):
        found = {P.members for P in F.essentials}
        for P in F.objects:
            expected = F.is_centric(P) and brute_strongly_embedded(F.out(P), F.p)
            assert (P.members in found) == expected, (text, F.p, P)
            if expected:
                assert F.is_centric(P)


def test_diagram_shape():
    F = fusion_system(build_text("S(4)"), 2)
    D = diagram(F)
    assert len(D.nodes) == 10
    assert sorted(D.levels) == [0, 1, 2, 3]
    assert [len(D.levels[k]) for k in range(4)] == [1, 5, 3, 1]
    assert len(D.conjugations) == sum(c.size - 1 for c in D.classes)
    assert len(D.labels) == 7
    for a, b in D.inclusions:
        assert D.nodes[b].order == 2 * D.nodes[a].order and D.nodes[a].issubset(D.nodes[b])
    E = essential_subsystem(F)
    assert [P.order for P in E.nodes] == [4, 8]
    assert E.inclusions == [(0, 1)]
    assert E.labels == {0: "S3", 1: "Z/2xZ/2"}


def test_diagram_conjugation_edges_connect_classes():
    for text, F in systems():
        D = diagram(F)
        assert len(D.conjugations) == len(D.nodes) - len(D.classes)
        for a, b in D.conjugations:
            assert D.node_class[a] == D.node_class[b]


def test_representatives_are_deterministic():
    F1 = fusion_system(build_text("S(4)"), 2)
    F2 = fusion_system(build_text("S(4)"), 2)
    assert [c.representative.members for c in F1.classes] == [c.representative.members for c in F2.classes]
