"""Permutations, translation embeddings, coset spaces, the holomorph."""

import pytest

from hgslab import (
    ClosureCapExceeded,
    GPerm,
    InvalidSpec,
    build_group,
    compose,
    coset_space,
    generated_perm_group,
    holomorph,
    invert,
    lambda_embed,
    lambda_image,
    left_translation,
    left_translation_image,
    perm_group_from_elements,
    rho_embed,
    rho_image,
    subgroup_closure,
)
from hgslab.perms import centralizer_of_regular, in_holomorph, perm_group_as_group
from hgslab.groups import are_isomorphic


def test_gperm_validation():
    with pytest.raises(InvalidSpec):
        GPerm((0, 0, 1))
    with pytest.raises(InvalidSpec):
        GPerm((0, 2))


def test_compose_and_invert():
    p = GPerm((1, 2, 0))
    q = GPerm((0, 2, 1))
    # compose applies the right factor first
    assert compose(p, q).images == (1, 0, 2)
    assert compose(p, invert(p)).images == (0, 1, 2)
    assert compose(invert(p), p).images == (0, 1, 2)


def test_translation_embeddings_are_homomorphisms(s3):
    n = s3.order
    for a in range(n):
        for b in range(n):
            ab = s3.table[a][b]
            assert compose(lambda_embed(s3, a), lambda_embed(s3, b)).images \
                == lambda_embed(s3, ab).images
            assert compose(rho_embed(s3, a), rho_embed(s3, b)).images \
                == rho_embed(s3, ab).images


def test_left_and_right_translations_commute(s3):
    for a in range(s3.order):
        for b in range(s3.order):
            lam, rho = lambda_embed(s3, a), rho_embed(s3, b)
            assert compose(lam, rho).images == compose(rho, lam).images


def test_lambda_rho_same_element_gives_conjugation(s3):
    for g in range(s3.order):
        phi = compose(lambda_embed(s3, g), rho_embed(s3, g))
        assert all(phi.images[x] == s3.conj(x, g) for x in range(s3.order))


def test_translation_images_are_regular(d4):
    lam, rho = lambda_image(d4), rho_image(d4)
    assert lam.is_regular() and rho.is_regular()
    assert lam.element_set != rho.element_set  # d4 is not abelian
    C6 = build_group("cyclic:6")
    assert lambda_image(C6).element_set == rho_image(C6).element_set


def test_centralizer_of_left_translations_is_right_translations(s3):
    cent = centralizer_of_regular(lambda_image(s3))
    assert cent.element_set == rho_image(s3).element_set


def test_generated_perm_group_and_cap():
    cycle = GPerm((1, 2, 3, 4, 5, 0))
    swap = GPerm((1, 0, 2, 3, 4, 5))
    assert generated_perm_group([cycle]).order == 6
    with pytest.raises(ClosureCapExceeded):
        generated_perm_group([cycle, swap], cap=100)  # sym(6) has order 720


def test_perm_group_canonical_hash_is_content_based(s3):
    a = lambda_image(s3)
    b = perm_group_from_elements([p.images for p in a.elements])
    assert a.canonical_hash() == b.canonical_hash()
    assert a.canonical_key() == b.canonical_key()


def test_perm_group_as_group_recovers_the_group(s3):
    H, elems = perm_group_as_group(lambda_image(s3))
    assert H.order == 6
    assert are_isomorphic(H, s3) is not None
    assert len(elems) == 6


def test_coset_space_shape(d4):
    T = subgroup_closure(d4, [1])  # the reflection s, order 2
    cs = coset_space(d4, T)
    assert cs.degree == 4
    assert cs.cosets[0][0] == 0  # identity coset first
    assert sorted(x for c in cs.cosets for x in c) == list(range(8))
    act = left_translation_image(cs)
    assert act.is_transitive()
    for h in range(d4.order):
        perm = left_translation(cs, h)
        assert sorted(perm.images) == list(range(4))


def test_holomorph_membership_and_factorization():
    C6 = build_group("cyclic:6")
    hol = holomorph(C6)
    assert hol.as_group().order == 12  # 6 * |Aut(C6)|
    for p in rho_image(C6).elements:
        assert in_holomorph(C6, p)
    # a transposition of two non-identity points is not translation+auto
    assert not in_holomorph(C6, GPerm((0, 2, 1, 3, 4, 5)))
    inner = hol.factorize(lambda_embed(C6, 2))
    assert inner is not None
