"""Finite permutation groups: arithmetic, classes, subgroups, quotients.

Elements are tuples of 0-based images; the product ``mul(a, b)`` is the
composition "apply b, then a", so matrix representations satisfy
rho(mul(a, b)) = rho(a) rho(b) with matrices acting on column vectors.

Orders come from a deterministic Schreier-Sims stabilizer chain (cap
10^5 by default); everything that needs the element list (classes,
normalizers, sections, ...) enumerates it by BFS, capped at 10^4.
Class representatives, coset representatives and subgroup canonical
forms all use the lexicographic order on image tuples, so every
derived object is reproducible.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from functools import reduce

Perm = tuple[int, ...]


class InvalidGroupInput(ValueError):
    pass


class ResourceCapExceeded(RuntimeError):
    pass


class NotASubgroup(ValueError):
    pass


class NotNormal(ValueError):
    pass


def _env_cap(name: str, default: int) -> int:
    v = os.environ.get(name)
    return int(v) if v else default


@dataclass
class Caps:
    degree: int = _env_cap("AWCKIT_MAX_DEGREE", 2000)
    order: int = _env_cap("AWCKIT_MAX_ORDER", 100_000)
    enumeration: int = _env_cap("AWCKIT_MAX_ENUM", 20_000)


CAPS = Caps()


# -- raw permutation arithmetic --------------------------------------------


def mul(a: Perm, b: Perm) -> Perm:
    """Composition: apply b first, then a."""
    return tuple(a[x] for x in b)


def inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def conj(g: Perm, x: Perm) -> Perm:
    """g x g^-1."""
    return mul(mul(g, x), inv(g))


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def perm_order(a: Perm) -> int:
    n = len(a)
    seen = [False] * n
    out = 1
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            ln += 1
        out = out * ln // math.gcd(out, ln)
    return out


def perm_power(a: Perm, e: int) -> Perm:
    n = len(a)
    if e < 0:
        return perm_power(inv(a), -e)
    out = identity_perm(n)
    base = a
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def from_cycles(n: int, cycles) -> Perm:
    """0-based cycles."""
    img = list(range(n))
    for cyc in cycles:
        for i, j in zip(cyc, cyc[1:]):
            img[i] = j
        if cyc:
            img[cyc[-1]] = cyc[0]
    return tuple(img)


# -- stabilizer chain (deterministic Schreier-Sims) -------------------------


class _StabChain:
    """Textbook deterministic Schreier-Sims; enough for desk-scale orders."""

    def __init__(self, degree: int):
        self.degree = degree
        self.base: list[int] = []
        self.gens: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def _orbit(self, level: int):
        b = self.base[level]
        trans = {b: identity_perm(self.degree)}
        queue = [b]
        gens = self.gens[level]
        while queue:
            pt = queue.pop()
            for g in gens:
                npt = g[pt]
                if npt not in trans:
                    trans[npt] = mul(g, trans[pt])
                    queue.append(npt)
        self.transversals[level] = trans

    def sift(self, g: Perm):
        """Return (level, residue); residue is identity iff g in the group."""
        for lvl in range(len(self.base)):
            b = self.base[lvl]
            img = g[b]
            t = self.transversals[lvl].get(img)
            if t is None:
                return lvl, g
            g = mul(inv(t), g)
        return len(self.base), g

    def _new_level(self, g: Perm):
        moved = next(i for i in range(self.degree) if g[i] != i)
        self.base.append(moved)
        self.gens.append([])
        self.transversals.append({})

    def add_generator(self, g: Perm, level: int = 0):
        lvl, residue = self.sift(g)
        if residue == identity_perm(self.degree):
            return
        if lvl == len(self.base):
            self._new_level(residue)
        for l in range(level, lvl + 1):
            if residue not in self.gens[l]:
                self.gens[l].append(residue)
        for l in range(lvl, level - 1, -1):
            self._orbit(l)
            if self.order() > CAPS.order:
                raise ResourceCapExceeded(
                    f"group order exceeds cap {CAPS.order}"
                )
        # process Schreier generators of the deepest touched level
        for l in range(level, lvl + 1):
            trans = self.transversals[l]
            for pt, t in list(trans.items()):
                for g2 in self.gens[l]:
                    rep2 = trans[g2[pt]]
                    schreier = mul(inv(rep2), mul(g2, t))
                    s_lvl, s_res = self.sift(schreier)
                    if s_res != identity_perm(self.degree):
                        self.add_generator(schreier, l + 1 if s_lvl > l else l)


def _build_chain(degree: int, generators) -> _StabChain:
    chain = _StabChain(degree)
    for g in generators:
        chain.add_generator(g)
    return chain


# -- groups ------------------------------------------------------------------


class PermutationGroup:
    """Group generated by permutations of {0..degree-1}."""

    def __init__(self, degree: int, generators, name: str | None = None, validate: bool = True):
        if degree < 1:
            raise InvalidGroupInput("degree must be positive")
        if degree > CAPS.degree:
            raise ResourceCapExceeded(f"degree {degree} exceeds cap {CAPS.degree}")
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if validate:
                if len(g) != degree:
                    raise InvalidGroupInput("generator length does not match degree")
                if sorted(g) != list(range(degree)):
                    raise InvalidGroupInput(f"not a permutation of 0..{degree - 1}: {g}")
            gens.append(g)
        # drop duplicate / identity generators but keep at least the structure
        seen = set()
        uniq = []
        ident = identity_perm(degree)
        for g in gens:
            if g != ident and g not in seen:
                uniq.append(g)
                seen.add(g)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(uniq)
        self.name = name
        self._chain = None
        self._elements = None
        self._index = None
        self._word = None
        self._classes = None
        self._prod_table = None
        self._cache: dict = {}

    # construction-time data -------------------------------------------------

    @property
    def chain(self) -> _StabChain:
        if self._chain is None:
            self._chain = _build_chain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        lvl, res = self.chain.sift(g)
        return res == identity_perm(self.degree)

    @property
    def identity(self) -> Perm:
        return identity_perm(self.degree)

    # element enumeration ------------------------------------------------------

    def elements(self) -> tuple[Perm, ...]:
        """All elements, lexicographically sorted (identity first)."""
        if self._elements is None:
            n = self.order()
            if n > CAPS.enumeration:
                raise ResourceCapExceeded(
                    f"element enumeration of order {n} exceeds cap {CAPS.enumeration}"
                )
            ident = self.identity
            word: dict[Perm, tuple[Perm, int] | None] = {ident: None}
            queue = [ident]
            while queue:
                e = queue.pop(0)
                for gi, g in enumerate(self.generators):
                    ne = mul(e, g)
                    if ne not in word:
                        word[ne] = (e, gi)
                        queue.append(ne)
            self._word = word
            self._elements = tuple(sorted(word))
            self._index = {e: i for i, e in enumerate(self._elements)}
        return self._elements

    def element_index(self, g: Perm) -> int:
        self.elements()
        return self._index[tuple(g)]

    def word_tree(self) -> dict:
        """element -> (parent, generator index), identity -> None; e = parent * gen."""
        self.elements()
        return self._word

    def product_table(self):
        """|G| x |G| array of element indices: T[i, j] = index(e_i * e_j)."""
        if self._prod_table is None:
            import numpy as np

            els = self.elements()
            idx = self._index
            n = len(els)
            T = np.zeros((n, n), dtype=np.int32)
            b_arr = np.array(els, dtype=np.int64)  # row j holds e_j's images
            for i, a in enumerate(els):
                # mul(a, b)[x] = a[b[x]]: apply a's image array to every row
                prods = np.array(a, dtype=np.int64)[b_arr]
                T[i] = [idx[tuple(row)] for row in prods]
            self._prod_table = T
        return self._prod_table

    def inverse_index(self):
        """Array inv_idx with elements()[inv_idx[i]] = elements()[i]^-1."""
        key = "inv_idx"
        if key not in self._cache:
            import numpy as np

            els = self.elements()
            self._cache[key] = np.array(
                [self._index[inv(e)] for e in els], dtype=np.int64
            )
        return self._cache[key]

    def exponent(self) -> int:
        key = "exponent"
        if key not in self._cache:
            out = 1
            for rep, _size in self.conjugacy_class_list():
                o = perm_order(rep)
                out = out * o // math.gcd(out, o)
            self._cache[key] = out
        return self._cache[key]

    # classes ------------------------------------------------------------------

    def conjugacy_class_list(self) -> list[tuple[Perm, int]]:
        """(representative, size) per class; reps lex-least, classes sorted by rep."""
        self._compute_classes()
        return self._classes

    def class_index_of(self, g: Perm) -> int:
        self._compute_classes()
        return self._class_of[tuple(g)]

    def class_elements(self, i: int) -> frozenset:
        self._compute_classes()
        return self._class_sets[i]

    def _compute_classes(self):
        if self._classes is not None:
            return
        els = self.elements()
        unseen = set(els)
        classes = []
        sets = []
        while unseen:
            start = min(unseen)
            orbit = {start}
            queue = [start]
            while queue:
                x = queue.pop()
                for g in self.generators:
                    y = conj(g, x)
                    if y not in orbit:
                        orbit.add(y)
                        queue.append(y)
            unseen -= orbit
            classes.append((min(orbit), len(orbit)))
            sets.append(frozenset(orbit))
        order = sorted(range(len(classes)), key=lambda i: classes[i][0])
        self._classes = [classes[i] for i in order]
        self._class_sets = [sets[i] for i in order]
        self._class_of = {}
        for ci, s in enumerate(self._class_sets):
            for x in s:
                self._class_of[x] = ci

    # misc ----------------------------------------------------------------------

    def subgroup(self, generators, name: str | None = None) -> "SubgroupHandle":
        return SubgroupHandle(self, generators, name=name)

    def element_set(self) -> frozenset:
        return frozenset(self.elements())

    def random_elements(self, count: int, seed: int) -> list[Perm]:
        """Seeded random elements via random subproducts of the element list."""
        import random

        rng = random.Random(seed)
        els = self.elements()
        return [els[rng.randrange(len(els))] for _ in range(count)]

    def __repr__(self):
        nm = self.name or "group"
        try:
            return f"<{nm}: degree {self.degree}, order {self.order()}>"
        except ResourceCapExceeded:
            return f"<{nm}: degree {self.degree}>"


class SubgroupHandle(PermutationGroup):
    """Subgroup of a parent group, itself a full-featured group."""

    def __init__(self, parent: PermutationGroup, generators, name: str | None = None):
        gens = [tuple(g) for g in generators]
        for g in gens:
            if g not in parent:
                raise NotASubgroup("generator not contained in the parent group")
        super().__init__(parent.degree, gens, name=name)
        self.parent = parent

    def subgroup_in_parent(self, generators, name=None) -> "SubgroupHandle":
        return SubgroupHandle(self.parent, generators, name=name)


# -- group file format -------------------------------------------------------


def load_group(spec: dict | str) -> PermutationGroup:
    """Build a group from the JSON record {name?, degree, generators} (1-based)."""
    if isinstance(spec, str):
        with open(spec) as fh:
            spec = json.load(fh)
    if not isinstance(spec, dict) or "degree" not in spec or "generators" not in spec:
        raise InvalidGroupInput("group record must have 'degree' and 'generators'")
    degree = int(spec["degree"])
    gens = []
    for row in spec["generators"]:
        try:
            g = tuple(int(x) - 1 for x in row)
        except (TypeError, ValueError) as exc:
            raise InvalidGroupInput(f"malformed generator row: {row}") from exc
        if len(g) != degree:
            raise InvalidGroupInput("generator length does not match degree")
        if sorted(g) != list(range(degree)):
            raise InvalidGroupInput(f"generator is not a bijection of 1..{degree}")
        gens.append(g)
    G = PermutationGroup(degree, gens, name=spec.get("name"))
    G.order()  # eager; raises ResourceCapExceeded when over cap
    return G


def group_to_record(G: PermutationGroup) -> dict:
    rec = {
        "degree": G.degree,
        "generators": [[x + 1 for x in g] for g in G.generators],
    }
    if G.name:
        rec["name"] = G.name
    return rec


# -- conjugacy / p-regular ----------------------------------------------------


def conjugacy_classes(G: PermutationGroup) -> list[tuple[Perm, int]]:
    return G.conjugacy_class_list()


def p_regular_classes(G: PermutationGroup, p: int) -> list[tuple[Perm, int]]:
    from .gf import is_prime

    if not is_prime(p):
        raise InvalidGroupInput(f"{p} is not prime")
    return [(rep, size) for rep, size in G.conjugacy_class_list() if perm_order(rep) % p != 0]


# -- subgroup calculus ----------------------------------------------------------


def _require_subgroup(G: PermutationGroup, H: PermutationGroup):
    for g in H.generators:
        if g not in G:
            raise NotASubgroup("H is not contained in G")


def centralizer(G: PermutationGroup, H: PermutationGroup) -> SubgroupHandle:
    _require_subgroup(G, H)
    hgens = H.generators
    gens = [g for g in G.elements() if all(mul(g, h) == mul(h, g) for h in hgens)]
    return SubgroupHandle(G, gens, name="centralizer")


def center(G: PermutationGroup) -> SubgroupHandle:
    return centralizer(G, G)


def normalizer(G: PermutationGroup, H: PermutationGroup) -> SubgroupHandle:
    _require_subgroup(G, H)
    hset = H.element_set()
    gens = [g for g in G.elements() if all(conj(g, h) in hset for h in H.generators)]
    return SubgroupHandle(G, gens, name="normalizer")


def normal_closure(G: PermutationGroup, seeds) -> SubgroupHandle:
    """Smallest normal subgroup of G containing the seed elements."""
    closure = set()
    queue = list(seeds)
    while queue:
        x = queue.pop()
        if x in closure:
            continue
        closure.add(x)
        for g in G.generators:
            y = conj(g, x)
            if y not in closure:
                queue.append(y)
    return SubgroupHandle(G, sorted(closure), name="normal closure")


def derived_subgroup(G: PermutationGroup) -> SubgroupHandle:
    comms = []
    for a in G.generators:
        for b in G.generators:
            comms.append(mul(mul(a, b), mul(inv(a), inv(b))))
    H = normal_closure(G, comms)
    H.name = "derived"
    return H


def stabilizer_calculus(G: PermutationGroup, H: PermutationGroup | None, kind: str) -> SubgroupHandle:
    if kind == "normalizer":
        return normalizer(G, H)
    if kind == "centralizer":
        return centralizer(G, H)
    if kind == "center":
        return center(G)
    if kind == "derived":
        return derived_subgroup(G)
    raise InvalidGroupInput(f"unknown stabilizer kind {kind!r}")


def is_perfect(G: PermutationGroup) -> bool:
    return derived_subgroup(G).order() == G.order()


def is_normal(G: PermutationGroup, N: PermutationGroup) -> bool:
    _require_subgroup(G, N)
    nset = N.element_set()
    return all(conj(g, x) in nset for g in G.generators for x in N.generators)


def sylow_subgroup(G: PermutationGroup, p: int) -> SubgroupHandle:
    """One Sylow p-subgroup, built by normalizer ascent."""
    from .gf import is_prime

    if not is_prime(p):
        raise InvalidGroupInput(f"{p} is not prime")
    target = 1
    n = G.order()
    while n % p == 0:
        target *= p
        n //= p
    P = SubgroupHandle(G, [], name=f"sylow_{p}")
    while P.order() < target:
        N = normalizer(G, P)
        pset = P.element_set()
        grown = False
        for x in N.elements():
            if x in pset:
                continue
            o = perm_order(x)
            if o % p == 0 or o == 1:
                # take the p-part of x to get a p-element
                op = 1
                while o % p == 0:
                    o //= p
                    op *= p
                xp = perm_power(x, perm_order(x) // op)
                if xp not in pset and perm_order(xp) > 1:
                    P = SubgroupHandle(G, list(P.generators) + [xp], name=f"sylow_{p}")
                    grown = True
                    break
        if not grown:
            raise ArithmeticError("sylow ascent stalled; should not happen")
    return P


def core_p(G: PermutationGroup, p: int) -> SubgroupHandle:
    """O_p(G): the largest normal p-subgroup (intersection of Sylow conjugates)."""
    from .gf import is_prime

    if not is_prime(p):
        raise InvalidGroupInput(f"{p} is not prime")
    if G.order() % p != 0:
        return SubgroupHandle(G, [], name=f"O_{p}")
    P = sylow_subgroup(G, p)
    pset = P.element_set()
    inter = set(pset)
    seen = {pset}
    queue = [pset]
    while queue and len(inter) > 1:
        s = queue.pop()
        for g in G.generators:
            t = frozenset(conj(g, x) for x in s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
                inter &= t
    return SubgroupHandle(G, sorted(inter), name=f"O_{p}")


# -- cosets, sections, quotients ---------------------------------------------


@dataclass(frozen=True)
class GroupSection:
    """Normalized section of G/H: one representative per coset, s(1) = 1.

    Cosets are labelled by their lexicographically least element, which is
    also the representative; the identity coset maps to the identity.
    """

    group: PermutationGroup
    subgroup: PermutationGroup
    quotient_reps: tuple[Perm, ...]  # sorted; index 0 is the identity

    def coset_of(self, g: Perm) -> Perm:
        hset = self.subgroup.elements()
        return min(mul(g, h) for h in hset)

    def __call__(self, coset_label: Perm) -> Perm:
        return coset_label  # representative == label by construction


def left_coset_reps(G: PermutationGroup, H: PermutationGroup) -> tuple[Perm, ...]:
    """Lex-least representative of each left coset gH, sorted."""
    _require_subgroup(G, H)
    els = G.elements()
    hels = H.elements()
    seen = set()
    reps = []
    for g in els:  # ascending; first unseen element is its coset's minimum
        if g in seen:
            continue
        reps.append(g)
        for h in hels:
            seen.add(mul(g, h))
    return tuple(reps)


def normalized_section(G: PermutationGroup, H: PermutationGroup) -> GroupSection:
    return GroupSection(G, H, left_coset_reps(G, H))


class QuotientMap:
    """Projection G -> G/N realized on the left-coset action."""

    def __init__(self, G: PermutationGroup, N: PermutationGroup):
        if not is_normal(G, N):
            raise NotNormal("N is not normal in G")
        self.source = G
        self.kernel_subgroup = N
        reps = left_coset_reps(G, N)
        self._reps = reps
        nset = N.elements()
        lookup = {}
        for i, r in enumerate(reps):
            for h in nset:
                lookup[mul(r, h)] = i
        self._coset_index = lookup
        gen_images = [self._perm_of(g) for g in G.generators]
        self.target = PermutationGroup(
            max(len(reps), 1), gen_images, name=(f"{G.name}/{N.name}" if G.name and N.name else None)
        )
        self._image_cache: dict[Perm, Perm] = {}

    def _perm_of(self, g: Perm) -> Perm:
        return tuple(self._coset_index[mul(g, r)] for r in self._reps)

    def apply(self, g: Perm) -> Perm:
        g = tuple(g)
        out = self._image_cache.get(g)
        if out is None:
            out = self._perm_of(g)
            self._image_cache[g] = out
        return out

    def section(self, q: Perm) -> Perm:
        """Lex-least preimage; sends the identity to the identity."""
        return self._reps[q[0]]

    def coset_representatives(self) -> tuple[Perm, ...]:
        return self._reps

    def kernel(self) -> SubgroupHandle:
        ident = self.target.identity
        els = [g for g in self.source.elements() if self.apply(g) == ident]
        return SubgroupHandle(self.source, els, name="kernel")


def quotient_group(G: PermutationGroup, N: PermutationGroup) -> tuple[PermutationGroup, QuotientMap]:
    qm = QuotientMap(G, N)
    return qm.target, qm


# -- p-subgroup classes ---------------------------------------------------------


def _subgroup_orbit(G: PermutationGroup, sset: frozenset) -> set[frozenset]:
    orbit = {sset}
    queue = [sset]
    while queue:
        s = queue.pop()
        for g in G.generators:
            t = frozenset(conj(g, x) for x in s)
            if t not in orbit:
                orbit.add(t)
                queue.append(t)
    return orbit


def subgroup_orbit_with_witness(G: PermutationGroup, sset: frozenset) -> dict[frozenset, Perm]:
    """Map conjugate-set -> g with g . sset . g^-1 = conjugate-set."""
    out = {sset: G.identity}
    queue = [sset]
    while queue:
        s = queue.pop()
        base = out[s]
        for g in G.generators:
            t = frozenset(conj(g, x) for x in s)
            if t not in out:
                out[t] = mul(g, base)
                queue.append(t)
    return out


def _canonical_set(orbit: set[frozenset]) -> tuple:
    return min(tuple(sorted(s)) for s in orbit)


def p_subgroup_classes(G: PermutationGroup, p: int) -> list[SubgroupHandle]:
    """One representative per conjugacy class of p-subgroups (trivial included).

    Ascending construction: extend each class representative by p-elements
    of its normalizer, dedupe by conjugacy.  Representatives are the
    lexicographically least subgroup (as a sorted element tuple) in their
    class, listed by (order, canonical form).
    """
    from .gf import is_prime

    if not is_prime(p):
        raise InvalidGroupInput(f"{p} is not prime")
    trivial = SubgroupHandle(G, [], name="1")
    found: dict[tuple, SubgroupHandle] = {}
    key0 = _canonical_set({frozenset(trivial.elements())})
    found[key0] = trivial
    frontier = [trivial]
    while frontier:
        new_frontier = []
        for P in frontier:
            N = normalizer(G, P)
            pset = P.element_set()
            for x in N.elements():
                if x in pset:
                    continue
                o = perm_order(x)
                # p-part of x normalizes P, so <P, x_p> is a p-group
                op = 1
                oo = o
                while oo % p == 0:
                    oo //= p
                    op *= p
                if op == 1:
                    continue
                xp = perm_power(x, o // op)
                if xp in pset:
                    continue
                Q = SubgroupHandle(G, list(P.generators) + [xp])
                orbit = _subgroup_orbit(G, frozenset(Q.elements()))
                key = _canonical_set(orbit)
                if key not in found:
                    rep = SubgroupHandle(G, _min_gens_from_set(G, key), name=f"{p}-subgroup")
                    found[key] = rep
                    new_frontier.append(rep)
        frontier = new_frontier
    out = sorted(found.values(), key=lambda S: (S.order(), tuple(sorted(S.elements()))))
    return out


def _min_gens_from_set(G: PermutationGroup, elements: tuple) -> list[Perm]:
    """Small generating set for the subgroup whose element tuple is given."""
    want = set(elements)
    gens: list[Perm] = []
    have = {G.identity}
    for x in elements:
        if x in have:
            continue
        gens.append(x)
        have = _closure_of(set(gens) | {G.identity}, cap=len(want))
        if have == want:
            break
    return gens


def brute_force_p_subgroups(G: PermutationGroup, p: int) -> set[frozenset]:
    """All p-subgroups as element sets, by exhaustive closure (oracle)."""
    p_elements = [x for x in G.elements() if x != G.identity and perm_order(x) == _p_part(perm_order(x), p)]
    all_sets: set[frozenset] = {frozenset({G.identity})}
    frontier = [frozenset({G.identity})]
    while frontier:
        nxt = []
        for s in frontier:
            for x in p_elements:
                if x in s:
                    continue
                closure = _closure_of(s | {x})
                if closure is None:
                    continue
                if _p_part(len(closure), p) != len(closure):
                    continue
                fs = frozenset(closure)
                if fs not in all_sets:
                    all_sets.add(fs)
                    nxt.append(fs)
        frontier = nxt
    return all_sets


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _closure_of(seed: set, cap: int = 4096):
    closure = set(seed)
    queue = list(seed)
    gens = list(seed)
    while queue:
        e = queue.pop()
        for g in gens:
            ne = mul(e, g)
            if ne not in closure:
                closure.add(ne)
                queue.append(ne)
                if len(closure) > cap:
                    return None
    return closure


def direct_product(groups: list[PermutationGroup], name=None) -> tuple[PermutationGroup, list]:
    """Direct product acting on the disjoint union of the factors' points.

    Returns (product, embeddings) with embeddings[i] mapping a factor element
    to the corresponding product element.
    """
    offsets = []
    total = 0
    for G in groups:
        offsets.append(total)
        total += G.degree
    gens = []
    for i, G in enumerate(groups):
        for g in G.generators:
            img = list(range(total))
            for x, y in enumerate(g):
                img[offsets[i] + x] = offsets[i] + y
            gens.append(tuple(img))
    P = PermutationGroup(total, gens, name=name)

    def embed(i):
        def f(g):
            img = list(range(total))
            for x, y in enumerate(g):
                img[offsets[i] + x] = offsets[i] + y
            return tuple(img)

        return f

    return P, [embed(i) for i in range(len(groups))]
