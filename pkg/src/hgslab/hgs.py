"""Regular subgroups of Perm(G) normalized by the left translations.

Such subgroups classify the Hopf-Galois structures on a Galois extension
with group G, so we call a certified one a structure.  Enumeration goes
through the holomorph of each candidate type: regular subgroups of Perm(G)
of type M normalized by lambda(G) correspond to regular embeddings of G
into Hol(M), which is a far smaller search space than Perm(G).
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import itertools

from .errors import InvalidSpec, NotRegular, NotStable, UnknownType, UnsupportedOrder
from .groups import (
    FiniteGroup,
    GroupSpec,
    automorphisms,
    are_isomorphic,
    build_group,
    catalog_complete,
    catalog_specs,
)
from .perms import (
    GPerm,
    PermGroup,
    _compose,
    _conjugate,
    _invert,
    centralizer_of_regular,
    holomorph,
    lambda_image,
    perm_group_as_group,
    perm_group_from_elements,
    rho_image,
)


class RegularSubgroup:
    """A certified G-stable regular subgroup of Perm(G).

    eta[a] is the unique member sending 0 to a; this indexing doubles as the
    regularity certificate.
    """

    __slots__ = ("group", "perms", "eta", "_type_label", "_abstract")

    def __init__(self, group: FiniteGroup, perms: PermGroup, eta, type_label=None):
        self.group = group
        self.perms = perms
        self.eta = tuple(eta)
        self._type_label = type_label
        self._abstract = None

    @property
    def order(self) -> int:
        return self.perms.order

    @property
    def type_label(self) -> Optional[GroupSpec]:
        return self._type_label

    def canonical_key(self) -> tuple:
        return self.perms.canonical_key()

    def canonical_hash(self) -> str:
        return self.perms.canonical_hash()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RegularSubgroup)
            and self.group is other.group
            and self.perms.element_set == other.perms.element_set
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.perms.element_set))

    def __repr__(self) -> str:
        label = str(self._type_label) if self._type_label else "?"
        return f"RegularSubgroup(order={self.order}, type={label})"

    def abstract(self) -> tuple:
        """The subgroup as an abstract FiniteGroup plus its element list."""
        if self._abstract is None:
            self._abstract = perm_group_as_group(self.perms)
        return self._abstract

    def is_abelian(self) -> bool:
        return self.perms.is_abelian()

    def to_json(self) -> dict:
        out = {
            "generators": [list(p.images) for p in self.perms.generators],
            "order": self.order,
            "canonical_hash": self.canonical_hash(),
        }
        out["type"] = str(self._type_label) if self._type_label else None
        return out


class HgsInventory:
    """All structures found on a group, sorted canonically."""

    __slots__ = ("group", "structures", "complete")

    def __init__(self, group: FiniteGroup, structures, complete: bool):
        self.group = group
        self.structures = tuple(
            sorted(structures, key=lambda s: s.canonical_key())
        )
        self.complete = complete

    def __len__(self) -> int:
        return len(self.structures)

    def __iter__(self):
        return iter(self.structures)

    def __getitem__(self, k: int) -> RegularSubgroup:
        return self.structures[k]

    def canonical_keys(self) -> set:
        return {s.canonical_key() for s in self.structures}

    def to_json(self) -> dict:
        return {
            "schema": "hgslab.inventory/1",
            "group": str(self.group.spec) if self.group.spec else None,
            "order": self.group.order,
            "complete": self.complete,
            "count": len(self.structures),
            "structures": [s.to_json() for s in self.structures],
        }


# ---------------------------------------------------------------------------
# Certification


def certify(
    G: FiniteGroup,
    perms: PermGroup,
    type_label: Optional[GroupSpec] = None,
    full_stability: bool = False,
) -> RegularSubgroup:
    """Validate order, regularity and stability, and build the eta index.

    Stability means conjugation by every left translation maps the subgroup
    into itself.  Checking the generators suffices because conjugation by a
    fixed lambda(g) is an automorphism of Perm(G); full_stability rechecks
    every member anyway.
    """
    n = G.order
    if perms.base != n:
        raise NotRegular(f"base {perms.base} does not match group order {n}")
    if perms.order != n:
        raise NotRegular(f"order {perms.order}, expected {n}")
    eta: list = [None] * n
    for p in perms.elements:
        a = p.images[0]
        if eta[a] is not None:
            raise NotRegular(f"elements {eta[a]} and {p} both send 0 to {a}")
        eta[a] = p
    # eta is filled exactly when the orbit of 0 is everything
    members = perms.element_set
    probes = perms.elements if full_stability else perms.generators
    for g in range(n):
        lam = G.table[g]
        lam_inv = G.table[G.inverse[g]]
        for p in probes:
            conj = _compose(lam, _compose(p.images, lam_inv))
            if conj not in members:
                raise NotStable(
                    f"conjugate of {p} by translation of g={g} leaves the set"
                )
    return RegularSubgroup(G, perms, eta, type_label=type_label)


def stability_action(N: RegularSubgroup, g: int, eta: GPerm) -> GPerm:
    """The action of g on a member: conjugation by the left translation."""
    if eta.images not in N.perms.element_set:
        raise ValueError("eta is not a member of the structure")
    G = N.group
    lam = G.table[g]
    lam_inv = G.table[G.inverse[g]]
    out = GPerm(_compose(lam, _compose(eta.images, lam_inv)), check=False)
    if out.images not in N.perms.element_set:
        raise NotStable(f"action of g={g} left the subgroup")
    return out


def opposite(N: RegularSubgroup) -> RegularSubgroup:
    """The centralizer of N in Perm(G), certified as a structure."""
    cent = centralizer_of_regular(N.perms)
    return certify(N.group, cent)


def lambda_structure(G: FiniteGroup) -> RegularSubgroup:
    return certify(G, lambda_image(G))


def rho_structure(G: FiniteGroup) -> RegularSubgroup:
    return certify(G, rho_image(G))


# ---------------------------------------------------------------------------
# Type identification


def type_of(N: RegularSubgroup) -> GroupSpec:
    """Catalog spec isomorphic to N; raises UnknownType outside the catalog."""
    if N._type_label is not None:
        return N._type_label
    abstract, _ = N.abstract()
    for spec in catalog_specs(N.order):
        M = build_group(spec)
        if are_isomorphic(M, abstract) is not None:
            N._type_label = spec
            return spec
    raise UnknownType(
        f"no catalog group of order {N.order} is isomorphic to this subgroup"
    )


# ---------------------------------------------------------------------------
# Enumeration through the holomorph


def _regular_subgroups_of_holomorph(spec: GroupSpec) -> tuple:
    """Every regular subgroup of Hol(M) of order |M|, M built from spec.

    Elements of a regular subgroup are fixed point free away from the
    identity and have pairwise distinct images of the base point, which
    prunes the generator search hard.  Found subgroups are extended one
    generator at a time, which reaches every subgroup.
    """
    key = ("hol_regulars", str(spec))
    if key in _HOL_CACHE:
        return _HOL_CACHE[key]
    M = build_group(spec)
    n = M.order
    if n == 1:
        result = (perm_group_from_elements([(0,)]),)
        _HOL_CACHE[key] = result
        return result
    hol = holomorph(M)
    ident = tuple(range(n))
    fpf = [
        p.images
        for p in hol.perm_group.elements
        if p.images != ident and all(px != x for x, px in enumerate(p.images))
    ]
    fpf_set = set(fpf)

    def close(gen_list):
        # returns frozenset of images or None when the candidate dies:
        # leaves the fpf pool, exceeds order n, or repeats a 0-image
        out = {ident}
        zero_images = {0}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gen_list:
                    p = _compose(a, g)
                    if p in out:
                        continue
                    if p not in fpf_set:
                        return None
                    z = p[0]
                    if z in zero_images or len(out) >= n:
                        return None
                    zero_images.add(z)
                    out.add(p)
                    nxt.append(p)
            frontier = nxt
        return frozenset(out)

    found: dict = {}
    frontier: list = []
    best_start: dict = {}
    for i, g in enumerate(fpf):
        sub = close([g])
        if sub is None:
            continue
        if sub not in best_start or best_start[sub] > i:
            if sub not in found:
                found[sub] = [g]
                frontier.append((sub, [g], i))
            best_start[sub] = min(best_start.get(sub, i), i)
    while frontier:
        nxt = []
        for sub, gens, last in frontier:
            # extending a proper subgroup at least doubles it (Lagrange),
            # so only subgroups of order <= n/2 can still reach order n
            if 2 * len(sub) > n:
                continue
            for j in range(last + 1, len(fpf)):
                g = fpf[j]
                if g in sub:
                    continue
                bigger = close(gens + [g])
                if bigger is None:
                    continue
                prev = best_start.get(bigger)
                if prev is not None and prev <= j:
                    continue
                best_start[bigger] = j
                if bigger not in found:
                    found[bigger] = gens + [g]
                nxt.append((bigger, gens + [g], j))
        frontier = nxt
    out = []
    for sub, gens in sorted(found.items(), key=lambda kv: sorted(kv[0])):
        if len(sub) == n:
            out.append(perm_group_from_elements(sub))
    result = tuple(out)
    _HOL_CACHE[key] = result
    return result


_HOL_CACHE: dict = {}


def _structure_from_embedding(
    G: FiniteGroup, M: FiniteGroup, beta_images: Sequence[tuple]
) -> tuple:
    """Canonical key and element images of the structure behind an embedding.

    beta_images[g] is a permutation of M; b(g) = beta(g)[0] must be a
    bijection G -> M, and the structure is a . lambda_M(mu) . a^-1 over all
    mu with a = b^-1.
    """
    n = G.order
    b = [beta_images[g][0] for g in range(n)]
    if len(set(b)) != n:
        raise NotRegular("embedding image is not regular at the base point")
    a = [0] * n
    for g, m in enumerate(b):
        a[m] = g
    tm = M.table
    elems = []
    for mu in range(n):
        row = tm[mu]
        elems.append(tuple(a[row[bx]] for bx in b))
    return frozenset(elems), elems


def enumerate_hgs(
    G: FiniteGroup, type_filter: Optional[GroupSpec] = None
) -> HgsInventory:
    """All G-stable regular subgroups of Perm(G), optionally of one type.

    Requires a catalog-complete order unless a type filter narrows the
    search; the completeness flag on the result reflects that.
    """
    n = G.order
    if type_filter is None:
        if not catalog_complete(n):
            raise UnsupportedOrder(
                f"catalog is incomplete for order {n}; pass a type filter"
            )
        specs = catalog_specs(n)
        complete = True
    else:
        M = build_group(type_filter)
        if M.order != n:
            raise InvalidSpec(
                f"type filter has order {M.order}, the group has order {n}"
            )
        specs = [_canonical_type(type_filter)]
        complete = False

    found: dict = {}
    auts = automorphisms(G)
    for spec in specs:
        M = build_group(spec)
        for Q in _regular_subgroups_of_holomorph(spec):
            Q_abs, q_elems = perm_group_as_group(Q)
            iso0 = are_isomorphic(G, Q_abs)
            if iso0 is None:
                continue
            base = [q_elems[iso0.images[g]].images for g in range(n)]
            for aut in auts:
                beta = [base[aut.images[g]] for g in range(n)]
                key, _ = _structure_from_embedding(G, M, beta)
                if key not in found:
                    found[key] = spec
    structures = []
    for key, spec in found.items():
        pg = perm_group_from_elements(key)
        structures.append(certify(G, pg, type_label=spec))
    return HgsInventory(G, structures, complete)


def _canonical_type(spec: GroupSpec) -> GroupSpec:
    """Replace a filter spec by the catalog spec of the same type if any."""
    M = build_group(spec)
    for cand in catalog_specs(M.order):
        if are_isomorphic(build_group(cand), M) is not None:
            return cand
    return spec


# ---------------------------------------------------------------------------
# Brute force oracle


BRUTE_FORCE_LIMIT = 8


def brute_force_inventory(G: FiniteGroup) -> HgsInventory:
    """Inventory by scanning all base-point-normalized bijections M -> G.

    Every regular subgroup equals b . lambda_M . b^-1 for its own abstract
    type M and the bijection b(m) = eta_m[0], which fixes 0; so scanning
    bijections with b(0) = 0 over all catalog types of the order is
    exhaustive.  Only sensible for order <= 8.
    """
    n = G.order
    if n > BRUTE_FORCE_LIMIT:
        raise UnsupportedOrder(
            f"brute force inventory is capped at order {BRUTE_FORCE_LIMIT}"
        )
    gens = G.generating_set()
    lam = {g: G.table[g] for g in gens}
    lam_inv = {g: G.table[G.inverse[g]] for g in gens}
    found: dict = {}
    for spec in catalog_specs(n):
        M = build_group(spec)
        tm = M.table
        rows = list(range(n))
        for rest in itertools.permutations(range(1, n)):
            b = (0,) + rest
            binv = [0] * n
            for m, g in enumerate(b):
                binv[g] = m
            key = frozenset(
                tuple(b[tm[m][binv[x]]] for x in range(n)) for m in rows
            )
            if key in found:
                continue
            stable = True
            for g in gens:
                lg, lgi = lam[g], lam_inv[g]
                for im in key:
                    if _compose(lg, _compose(im, lgi)) not in key:
                        stable = False
                        break
                if not stable:
                    break
            if stable:
                found[key] = spec
    structures = [
        certify(G, perm_group_from_elements(key), type_label=spec)
        for key, spec in found.items()
    ]
    return HgsInventory(G, structures, complete=True)
