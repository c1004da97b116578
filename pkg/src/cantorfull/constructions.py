"""Named constructions over the cocycle algebra.

Everything here is exact: disjointness hypotheses are checked with the
CloSet algebra, the resulting elements carry bijectivity certificates, and
postconditions (tower partitions, transport containment, conjugation
relations) are verified rather than assumed.
"""

import json
from dataclasses import dataclass, field

from . import caps as caps_mod
from .closets import CloSet
from .elements import (Element, commutator, compose, element_image, equal,
                       identity, inverse, is_identity, make_element, power,
                       shift)
from .errors import (CapExceeded, FixedPointFound, NotGood, NotMinimal,
                     NotOmniscient, OdometerLike, OverlapError,
                     PreconditionViolated, SearchExhausted, SemanticError,
                     SurplusViolated, WindowTooSmall)
from .language import max_gap, proper_recode, recurrence_bound, sft_engine
from .words import Word


# ---------------------------------------------------------------------------
# good sets and their 3-cycles


def is_good(closet):
    """{-1,0,1}-good: U, phi(U), phi^{-1}(U) pairwise disjoint."""
    try:
        _good_witness(closet)
        return True
    except NotGood:
        return False


def _good_witness(closet):
    translates = {-1: closet.shift_image(-1), 0: closet, 1: closet.shift_image(1)}
    for i in (-1, 0, 1):
        for j in (-1, 0, 1):
            if i < j:
                meet = translates[i].intersect(translates[j])
                if not meet.is_empty():
                    word = min(meet.members, key=closet.engine.alphabet.sort_key)
                    raise NotGood((f"phi^{i}U", f"phi^{j}U"),
                                  closet.engine.alphabet.format_word(word))
    return translates


def sigma_U(closet):
    """The order-<=3 cycle U -> phi(U) -> phi^{-1}(U) -> U, identity elsewhere.

    Cocycle: +1 on U, -2 on phi(U), +1 on phi^{-1}(U).
    """
    _good_witness(closet)
    engine = closet.engine
    r = closet.radius
    radius = r + 1
    members = closet.members
    span = 2 * r + 1

    def value(w):
        # window for "x in phi^c(U)" sits at position c
        if w[radius - r: radius + r + 1] in members:
            return 1
        if w[1 + radius - r: 1 + radius + r + 1] in members:
            return -2
        if w[-1 + radius - r: -1 + radius + r + 1] in members:
            return 1
        return 0

    table = {w: value(w) for w in engine.allowed_words(2 * radius + 1)}
    return make_element(engine, radius, table)


def cylinder(engine, anchor, letters):
    return CloSet.cylinder(engine, Word(tuple(letters), anchor))


# ---------------------------------------------------------------------------
# symmetric-group embeddings


class SymmetricEmbedding:
    """rho: S_n -> full group, sigma -> T_sigma moving the disjoint copies
    g_i(U) by g_{sigma(i)} g_i^{-1}.  Permutations are 0-indexed tuples."""

    def __init__(self, moves, closet):
        self.moves = list(moves)
        self.closet = closet
        self.n = len(self.moves)
        engine = closet.engine
        self.images = [element_image(closet, g) for g in self.moves]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if not self.images[i].is_disjoint(self.images[j]):
                    raise OverlapError(f"images {i} and {j} of U overlap")
        self._swaps = {(i, j): compose(self.moves[j], inverse(self.moves[i]))
                       for i in range(self.n) for j in range(self.n)}
        self.engine = engine

    def element(self, perm):
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise SemanticError(f"{perm} is not a permutation of 0..{self.n - 1}")
        engine = self.engine
        radius = max([im.radius for im in self.images] +
                     [self._swaps[(i, perm[i])].radius for i in range(self.n)])
        images = [im.at_radius(radius) for im in self.images]
        table = {}
        for w in engine.allowed_words(2 * radius + 1):
            value = 0
            for i, im in enumerate(images):
                if w in im.members:
                    h = self._swaps[(i, perm[i])]
                    value = h.value_in(w, radius)
                    break
            table[w] = value
        return make_element(engine, radius, table)

    def verify_relations(self):
        """Coxeter relations for the adjacent transpositions (complete for S_n)."""
        if self.n == 1:
            return is_identity(self.element((0,)))
        def swap(i):
            p = list(range(self.n))
            p[i], p[i + 1] = p[i + 1], p[i]
            return self.element(tuple(p))
        s = [swap(i) for i in range(self.n - 1)]
        e = identity(self.engine)
        for i, si in enumerate(s):
            if not equal(compose(si, si), e):
                return False
            if i + 1 < len(s):
                if not is_identity(power(compose(si, s[i + 1]), 3)):
                    return False
            for j in range(i + 2, len(s)):
                if not is_identity(power(compose(si, s[j]), 2)):
                    return False
        return True


def symmetric_embed(moves, closet):
    return SymmetricEmbedding(moves, closet)


# ---------------------------------------------------------------------------
# first-return maps and Kakutani-Rokhlin towers


def first_return(closet, cap=None):
    """phi_A: x in A -> phi^k x for the least k >= 1 with phi^k x in A."""
    engine = closet.engine
    if engine.minimal is not True:
        raise NotOmniscient("first return needs a certified-minimal engine")
    if closet.is_empty():
        raise NotOmniscient("the empty set is not omniscient")
    src = closet.reduced()
    gap = min(max_gap(engine, w, cap=cap) for w in src.members)
    r = src.radius
    radius = r + gap
    members = src.members
    table = {}
    for y in engine.allowed_words(2 * radius + 1):
        if y[gap: gap + 2 * r + 1] not in members:
            table[y] = 0
            continue
        for k in range(1, gap + 1):
            if y[gap - k: gap - k + 2 * r + 1] in members:
                table[y] = k
                break
        else:
            raise CapExceeded("no return within the recurrence bound", cap=gap)
    return make_element(engine, radius, table)


@dataclass(frozen=True)
class TowerPartition:
    pieces: tuple      # ((base CloSet, height), ...) sorted by height then base

    def verify(self):
        engine = self.pieces[0][0].engine
        levels = []
        for base, height in self.pieces:
            if base.is_empty():
                return False
            levels.extend(base.shift_image(i) for i in range(height))
        for i in range(len(levels)):
            for j in range(i + 1, len(levels)):
                if not levels[i].is_disjoint(levels[j]):
                    return False
        total = levels[0]
        for piece in levels[1:]:
            total = total.union(piece)
        return total == CloSet.full(engine)

    def tsv(self):
        lines = ["tower_id\theight\tbase_word_count"]
        for t, (base, height) in enumerate(self.pieces):
            lines.append(f"{t}\t{height}\t{len(base.reduced().members)}")
        return "\n".join(lines) + "\n"

    def dot(self):
        out = ["digraph towers {", "  rankdir=BT;"]
        for t, (_, height) in enumerate(self.pieces):
            for i in range(height):
                out.append(f'  "t{t}l{i}" [label="tower {t} level {i}"];')
                if i:
                    out.append(f'  "t{t}l{i - 1}" -> "t{t}l{i}";')
        out.append("}")
        return "\n".join(out) + "\n"


def kr_towers(closet, refine_by=(), cap=None):
    """Kakutani-Rokhlin partition over `closet`, bases refined by return time
    (and, optionally, so every level lies inside or outside each given set)."""
    engine = closet.engine
    if engine.minimal is not True:
        raise NotOmniscient("towers need a certified-minimal engine")
    if closet.is_empty():
        raise NotOmniscient("the empty set has no towers")
    src = closet.reduced()
    gap = min(max_gap(engine, w, cap=cap) for w in src.members)
    refine_radius = max([s.radius for s in refine_by], default=0)
    r = src.radius
    radius = r + gap + refine_radius
    members = src.members
    refined = [s.at_radius(refine_radius) if s.radius < refine_radius else s
               for s in refine_by]
    groups = {}
    for y in engine.allowed_words(2 * radius + 1):
        center = radius
        if y[center - r: center + r + 1] not in members:
            continue
        height = None
        for k in range(1, gap + 1):
            if y[center - k - r: center - k + r + 1] in members:
                height = k
                break
        if height is None:
            raise CapExceeded("no return within the recurrence bound", cap=gap)
        # level i of this column lives in phi^i([y]); classify each level
        signature = []
        for i in range(height):
            for s in refined:
                rs = s.radius
                window = y[center - i - rs: center - i + rs + 1]
                signature.append(window in s.members)
        groups.setdefault((height, tuple(signature)), set()).add(y)
    pieces = [(CloSet(engine, radius, words), height)
              for (height, _), words in sorted(
                  groups.items(),
                  key=lambda kv: (kv[0][0], kv[0][1],
                                  min(map(engine.alphabet.sort_key, kv[1]))))]
    partition = TowerPartition(tuple(pieces))
    if not partition.verify():
        raise AssertionError("tower partition failed its exactness check")
    return partition

# ---------------------------------------------------------------------------
# Glasner-Weiss transport


def _permutation_parity(perm):
    seen = [False] * len(perm)
    odd = False
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            odd = not odd
    return 1 if odd else 0


@dataclass(frozen=True)
class GWTransport:
    alpha: Element
    base: CloSet
    towers: tuple            # dicts: height, classes, permutation, parity
    contained: bool
    index: int

    def to_json(self):
        return json.dumps({
            "contained": self.contained,
            "mod": self.index,
            "towers": [dict(t) for t in self.towers],
        }, indent=2, sort_keys=True) + "\n"


def _transport_base(target, engine, depth):
    """Single-cylinder base inside `target`, refined `depth` extra letters,
    chosen to maximize the recurrence bound (rarer word, taller towers)."""
    rho = target.radius + depth
    candidates = sorted(target.at_radius(rho).members, key=engine.alphabet.sort_key)
    if not candidates:
        raise NotOmniscient("transport target is empty")
    best = max(candidates, key=lambda w: (recurrence_bound(engine, w),
                                          [-i for i in engine.alphabet.sort_key(w)]))
    base = CloSet(engine, rho, {best})
    translates = [base.shift_image(i) for i in range(5)]
    for i in range(5):
        for j in range(i + 1, 5):
            if not translates[i].is_disjoint(translates[j]):
                return None
    return base


def gw_transport(A, B, base_hint=None, retries=3):
    """alpha in the derived subgroup with alpha(B) inside A, built from level
    permutations of Kakutani-Rokhlin towers; requires #A-levels >= #B-levels
    in every tower (the clopen shadow of mu(B) < mu(A))."""
    engine = A.engine
    if engine.minimal is not True:
        raise NotMinimal("transport needs a certified-minimal engine")
    class_sets = {
        "A": A.minus(B),
        "B": B.minus(A),
        "AB": A.intersect(B),
        "none": A.union(B).complement(),
    }
    last_error = None
    for attempt in range(retries + 1):
        if base_hint is not None and attempt == 0:
            base = base_hint
        else:
            base = _transport_base(A, engine, attempt)
            if base is None:
                continue
        try:
            return _gw_attempt(engine, base, class_sets, A, B)
        except SurplusViolated as err:
            last_error = err
    raise last_error if last_error is not None else NotOmniscient("no 5-disjoint base found")


def _gw_attempt(engine, base, class_sets, A, B):
    towers = kr_towers(base, refine_by=(A, B))
    names = list(class_sets)
    plans = []
    for t, (piece, height) in enumerate(towers.pieces):
        classes = {name: [] for name in names}
        for i in range(height):
            level = piece.shift_image(i)
            for name in names:
                if level.is_subset(class_sets[name]):
                    classes[name].append(i)
                    break
            else:
                raise AssertionError("tower level not refined into a class")
        if len(classes["A"]) < len(classes["B"]):
            raise SurplusViolated(t)
        perm = list(range(height))
        targets = sorted(classes["A"])[:len(classes["B"])]
        rest_src = sorted(classes["A"])
        rest_dst = sorted(set(classes["A"]) - set(targets)) + sorted(classes["B"])
        for b, a in zip(sorted(classes["B"]), targets):
            perm[b] = a
        for s, d in zip(rest_src, rest_dst):
            perm[s] = d
        if _permutation_parity(perm) == 1:
            big = max(classes.values(), key=len)
            if len(big) < 2:
                raise SurplusViolated(t)
            u, v = sorted(big)[:2]
            # compose with the transposition (u v) on the right: swap sources
            perm[u], perm[v] = perm[v], perm[u]
        plans.append((piece, height, classes, tuple(perm)))

    radius = max(piece.radius + height - 1 for piece, height, _, _ in plans)
    table = {}
    for w in engine.allowed_words(2 * radius + 1):
        hits = []
        for piece, height, _, perm in plans:
            r = piece.radius
            for i in range(height):
                if w[i - r + radius: i + r + radius + 1] in piece.members:
                    hits.append(perm[i] - i)
        if len(hits) != 1:
            raise AssertionError("towers fail to partition at the table radius")
        table[w] = hits[0]
    alpha = make_element(engine, radius, table)

    contained = element_image(B, alpha).is_subset(A)
    from .actions import index_mod
    index = index_mod(alpha)
    report = []
    for t, (piece, height, classes, perm) in enumerate(plans):
        cycles = []
        seen = set()
        for i in range(height):
            if i in seen or perm[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = perm[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = perm[j]
            cycles.append("(" + " ".join(map(str, cyc)) + ")")
        report.append({
            "id": t,
            "height": height,
            "classes": {k: v for k, v in classes.items()},
            "permutation": "".join(cycles) or "()",
            "parity": "even",
        })
    result = GWTransport(alpha, base, tuple(report), contained, index)
    if not contained or index != 0:
        raise AssertionError("transport postcondition failed")
    return result


# ---------------------------------------------------------------------------
# Matui's generating set and the commutator recursion


def is_proper(engine, d):
    """No allowed word repeats a letter at distance <= d."""
    for w in engine.allowed_words(d + 1):
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                if w[i] == w[j]:
                    return False
    return True


def ensure_proper(engine, d=4):
    if is_proper(engine, d):
        return engine, None
    recoded, mapping = proper_recode(engine, d)
    return recoded, mapping


@dataclass(frozen=True)
class MatuiSet:
    engine: object
    recoding: object          # RecodingMap or None when already proper
    generators: tuple
    cylinder_words: tuple     # anchored 3-words, one per generator


def matui_generators(engine):
    """sigma over every cylinder Cyl({-1,0,1}, f) of the 4-proper recoding."""
    if engine.minimal is not True or engine.aperiodic is not True:
        raise NotMinimal("the finite generating set needs a minimal infinite subshift")
    proper_engine, mapping = ensure_proper(engine, 4)
    words = proper_engine.allowed_words(3)
    gens = tuple(sigma_U(cylinder(proper_engine, -1, h)) for h in words)
    return MatuiSet(proper_engine, mapping, gens, tuple(words))


def matui_cylinder_sigma(engine, h):
    """sigma_{Cyl(I_n, h)} built directly; h is the window at -n..n."""
    n = (len(h) - 1) // 2
    return sigma_U(cylinder(engine, -n, h))


def matui_by_recursion(engine, h):
    """sigma_{Cyl(I_n, h)} as an iterated commutator of the length-3 generators:
    sigma_{Cyl(I_n,h)} = [sigma_{Cyl(I_{n-1}, left)}, sigma_{Cyl(I_{n-1}, right)}^{-1}]
    where left/right drop two letters from the right/left end of h."""
    n = (len(h) - 1) // 2
    if n < 1 or len(h) != 2 * n + 1:
        raise SemanticError("recursion wants an odd window of radius >= 1")
    if n == 1:
        return matui_cylinder_sigma(engine, h)
    left = matui_by_recursion(engine, h[:-2])
    right = matui_by_recursion(engine, h[2:])
    return commutator(left, inverse(right))


def matui_recursion_word(engine, h):
    """The recursion's explicit word witness over the generating set, in the
    CLI's element grammar; evaluating it reproduces sigma_{Cyl(I_n, h)}."""
    n = (len(h) - 1) // 2
    if n == 1:
        return f'sigma(cyl(-1,"{engine.alphabet.format_word(h)}"))'
    left = matui_recursion_word(engine, h[:-2])
    right = matui_recursion_word(engine, h[2:])
    return f"comm({left},inv({right}))"


def qeqz_check(U, V):
    """Exact check of [sigma_V, sigma_U^{-1}] = sigma_{phi U and phi^{-1} V};
    the six translates of U and V must be pairwise disjoint except possibly
    phi U with phi^{-1} V."""
    engine = U.engine
    labeled = [("phi^-1U", U.shift_image(-1)), ("U", U), ("phiU", U.shift_image(1)),
               ("phi^-1V", V.shift_image(-1)), ("V", V), ("phiV", V.shift_image(1))]
    for i in range(len(labeled)):
        for j in range(i + 1, len(labeled)):
            ni, si = labeled[i]
            nj, sj = labeled[j]
            if {ni, nj} == {"phiU", "phi^-1V"}:
                continue
            if not si.is_disjoint(sj):
                raise PreconditionViolated((ni, nj))
    lhs = commutator(sigma_U(V), inverse(sigma_U(U)))
    rhs = sigma_U(U.shift_image(1).intersect(V.shift_image(-1)))
    return equal(lhs, rhs)

# ---------------------------------------------------------------------------
# lamplighter pairs inside non-odometer systems


@dataclass
class LamplighterPair:
    engine: object
    U: CloSet
    V: CloSet
    psi: Element              # first return to U
    Psi: Element              # psi * (phi psi phi^{-1})
    sigma0: Element           # swap of V and phi(V)
    checked_shifts: int = 0

    def lamp_set(self, F):
        """A_F: symmetric difference of psi^n(V) over n in F."""
        out = CloSet.empty(self.engine)
        for n in sorted(F):
            out = out.symmetric_difference(psi_power_image(self.psi, self.V, n))
        return out

    def sigma(self, F):
        """Involution exchanging A_F and phi(A_F) by phi^{+-1}."""
        return _swap_element(self.lamp_set(F))


def psi_power_image(psi, closet, n):
    g = power(psi, n) if n else None
    return element_image(closet, g) if g is not None else closet


def _swap_element(closet):
    """The involution swapping `closet` and phi(closet); they must be disjoint."""
    engine = closet.engine
    if not closet.is_disjoint(closet.shift_image(1)):
        raise OverlapError("set overlaps its shift; cannot swap")
    r = closet.radius
    radius = r + 1
    members = closet.members

    def value(w):
        if w[radius - r: radius + r + 1] in members:
            return 1
        if w[1 + radius - r: 1 + radius + r + 1] in members:
            return -1
        return 0

    table = {w: value(w) for w in engine.allowed_words(2 * radius + 1)}
    return make_element(engine, radius, table)


def lamplighter_pair(U, independence=3, search_width=8, verify=True, caps=None):
    """A lamplighter inside the full group: Psi acts as the shift on the lamps
    sigma_F, F a finite subset of Z.  Requires U disjoint from phi(U) and a
    clopen orbit of U that does not close up (non-odometer behaviour)."""
    caps = caps or caps_mod.DEFAULT
    engine = U.engine
    if not U.is_disjoint(U.shift_image(1)):
        raise OverlapError("U must be disjoint from phi(U)")
    from .actions import clopen_orbit
    if clopen_orbit(U, cap=caps.orbit) is not None:
        raise OdometerLike("the clopen orbit of U closes up")
    psi = first_return(U)
    phi = shift(engine)
    Psi = compose(psi, compose(compose(phi, psi), inverse(phi)))

    candidate_words = []
    base = U.reduced()
    for ext in range(search_width + 1):
        ws = sorted(base.at_radius(base.radius + ext).members,
                    key=engine.alphabet.sort_key)
        for w in ws:
            candidate_words.append((base.radius + ext, w))
    V = None
    for rho, w in candidate_words:
        cand = CloSet(engine, rho, {w})
        if not cand.is_subset(U) or cand.is_empty():
            continue
        if _psi_orbit_infinite(psi, cand, caps.orbit):
            V = cand
            break
    if V is None:
        raise SearchExhausted("no refining cylinder with an infinite return orbit")

    pair = LamplighterPair(engine, U, V, psi, Psi, _swap_element(V))
    if verify:
        _verify_lamplighter(pair, independence)
    return pair


def _psi_orbit_infinite(psi, closet, cap):
    seen = {closet.key()}
    current = closet
    for _ in range(cap):
        current = element_image(current, psi).reduced()
        key = current.key()
        if key in seen:
            return False
        seen.add(key)
    return True


def _verify_lamplighter(pair, independence):
    e = identity(pair.engine)
    if not equal(compose(pair.sigma0, pair.sigma0), e):
        raise AssertionError("sigma_{0} is not an involution")
    images = {n: psi_power_image(pair.psi, pair.V, n)
              for n in range(-independence, independence + 1)}
    keys = [images[n].key() for n in sorted(images)]
    if len(set(keys)) != len(keys):
        raise AssertionError("psi^n(V) are not pairwise distinct")
    window = range(-2, 3)
    subsets = [()]
    for n in window:
        subsets += [s + (n,) for s in subsets]
    checked = 0
    for F in subsets:
        lhs = compose(pair.Psi, compose(pair.sigma(F), inverse(pair.Psi)))
        rhs = pair.sigma(tuple(n + 1 for n in F))
        if not equal(lhs, rhs):
            raise AssertionError(f"conjugation relation fails for F={F}")
        checked += 1
    pair.checked_shifts = checked


# ---------------------------------------------------------------------------
# van Douwen involutions on the proper shift


VAN_DOUWEN_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def van_douwen_involutions(q):
    """The proper shift (no equal adjacent letters) on q >= 3 letters and the
    involutions sigma_i: shift by +1 on [letter_i at 0], -1 on [letter_i at 1]."""
    if q < 3:
        raise SemanticError("need at least 3 letters")
    letters = VAN_DOUWEN_LETTERS[:q]
    engine = sft_engine(letters, [c + c for c in letters])
    sigmas = []
    for a in letters:
        table = {}
        for w in engine.allowed_words(3):
            if w[1] == a:
                table[w] = 1
            elif w[2] == a:
                table[w] = -1
            else:
                table[w] = 0
        sigmas.append(make_element(engine, 1, table))
    return engine, sigmas


def van_douwen_witness(engine, indices):
    """An explicit point window w with w(j) = letter_{k_j}; applying the
    reversed word of involutions walks it to phi^{-n} w, which differs from w.
    Returns (word, expected_total_shift)."""
    letters = engine.alphabet.letters
    n = len(indices)
    values = {j + 1: letters[k] for j, k in enumerate(indices)}
    pool = letters

    def pick(position, *avoid):
        for c in pool:
            if c not in avoid:
                return c

    values[0] = pick(0, values[1], letters[indices[-1]])
    values[n + 1] = pick(n + 1, values[n])
    lo, hi = -1, n + 2
    values[lo] = pick(lo, values[0])
    values[hi] = pick(hi, values[hi - 1])
    word = Word(tuple(values[p] for p in range(lo, hi + 1)), lo)
    return word, -n


def van_douwen_walk(sigmas, indices, word):
    """Apply sigma_{k_1}, ..., sigma_{k_n} in turn (the inverse of the reduced
    word m = sigma_{k_1} ... sigma_{k_n}); returns the cumulative shift."""
    total = 0
    current = word
    for k in indices:
        step = sigmas[k].cocycle_at(current, 0)
        current = current.shifted(step)
        total += step
    return total


def van_douwen_certify(engine, sigmas, indices):
    """Two independent non-identity certificates for the reduced word
    m = sigma_{k_1} ... sigma_{k_n}.

    The walk shows the inverse word shifts the witness cylinder by -n whole;
    the automaton certificate then exhibits a non-n-periodic point through it,
    while the witness point itself is non-n-periodic because its letters at 0
    and n differ.  Returns (automaton_ok, witness_ok).
    """
    n = len(indices)
    word, expected = van_douwen_witness(engine, indices)
    if van_douwen_walk(sigmas, indices, word) != expected:
        return False, False
    automaton_ok = engine.cylinder_nonperiodic_exists(word.letters, n)
    witness_ok = word[0] != word[n]
    return automaton_ok, witness_ok


# ---------------------------------------------------------------------------
# Houghton-type profiles on the non-minimal examples


@dataclass(frozen=True)
class HoughtonProfile:
    end_translations: tuple
    exceptional_set: tuple


def houghton_engine_y():
    """Two-letter shift forbidding 'ba': the compactification Z u {+-inf}."""
    return sft_engine("ab", ["ba"])


def houghton_engine_y3():
    """Three-letter shift allowing only aa, ab, bc, cb: three ends."""
    return sft_engine("abc", ["ac", "ba", "bb", "ca", "cc"])


def _houghton_kind(engine):
    letters = engine.alphabet.letters
    pairs = {tuple(engine.alphabet.index(c) for c in w)
             for w in engine.allowed_words(2)}
    if len(letters) == 2 and pairs == {(0, 0), (0, 1), (1, 1)}:
        return "y2"
    if len(letters) == 3 and pairs == {(0, 0), (0, 1), (1, 2), (2, 1)}:
        return "y3"
    raise SemanticError("profiles are defined on the Y and Y' engines")


def _orbit_window(engine, kind, n, radius):
    a, b = engine.alphabet.letters[0], engine.alphabet.letters[1]
    c = engine.alphabet.letters[2] if kind == "y3" else None

    def letter(pos):
        if pos <= n:
            return a
        if kind == "y2":
            return b
        return b if (pos - n) % 2 == 1 else c

    return Word(tuple(letter(p) for p in range(-radius, radius + 1)), -radius)


def houghton_orbit_map(f, window):
    """The induced permutation n -> n + kappa(w_n) on [-window, window]."""
    engine = f.engine
    kind = _houghton_kind(engine)
    r = f.radius
    table = {}
    for n in range(-window, window + 1):
        w = _orbit_window(engine, kind, n, r)
        table[n] = n + f.cocycle_at(w, 0)
    return table


def _end_translation(table, positions, label):
    deviations = {table[n] - n for n in positions}
    if len(deviations) != 1:
        raise WindowTooSmall(f"{label} end does not stabilize in the window")
    return deviations.pop()


def houghton_profile(f, window):
    """Per-end eventual translations and the exceptional set of the induced
    integer permutation.  Ends: (+inf,) then (-inf,) for Y; (+inf, even -inf,
    odd -inf) for Y'."""
    from .errors import NotBijective
    if not f.bijective:
        raise NotBijective("profiles are defined for group elements")
    engine = f.engine
    kind = _houghton_kind(engine)
    table = houghton_orbit_map(f, window)
    quarter = max(1, window // 4)
    if kind == "y2":
        t_plus = _end_translation(table, range(window - quarter + 1, window + 1), "+inf")
        t_minus = _end_translation(table, range(-window, -window + quarter), "-inf")
        ends = (t_plus, t_minus)

        def expected(n):
            return n + (t_plus if n >= 0 else t_minus)
    else:
        t_plus = _end_translation(table, range(window - quarter + 1, window + 1), "+inf")
        evens = [n for n in range(-window, -window + 2 * quarter + 1) if n % 2 == 0]
        odds = [n for n in range(-window, -window + 2 * quarter + 1) if n % 2 != 0]
        t_even = _end_translation(table, evens, "even -inf")
        t_odd = _end_translation(table, odds, "odd -inf")
        ends = (t_plus, t_even, t_odd)

        def expected(n):
            if n >= 0:
                return n + t_plus
            return n + (t_even if n % 2 == 0 else t_odd)

    exceptional = tuple(n for n in sorted(table) if table[n] != expected(n))
    if any(abs(n) > window // 2 for n in exceptional):
        raise WindowTooSmall("deviations reach outside half the window")
    return HoughtonProfile(ends, exceptional)

# ---------------------------------------------------------------------------
# Rokhlin bases for fixed-point-free powers


def rokhlin_base(f, n, caps=None):
    """A clopen U with f^i(U), 0 <= i < n, pairwise disjoint and whose full
    f-orbit covers the space; greedy subcover construction from per-word
    neighborhoods, requiring f^i fixed-point-free for 1 <= i <= n-1."""
    caps = caps or caps_mod.DEFAULT
    engine = f.engine
    if n < 1:
        raise SemanticError("n must be >= 1")
    if n == 1:
        return CloSet.full(engine)
    powers = {}
    for i in range(1, n):
        powers[i] = power(f, i)
        c = powers[i].canonical_element()
        for w, v in c.table.items():
            if v == 0 or (engine.aperiodic is not True
                          and engine.cylinder_periodic_exists(w, v)):
                raise FixedPointFound(i, engine.alphabet.format_word(w))
    for i in range(1, n):
        powers[-i] = inverse(powers[i])

    start = max(g.radius for g in powers.values())
    chosen = None
    for radius in range(start, caps.radius_search + 1):
        words = engine.allowed_words(2 * radius + 1)
        cells = [CloSet(engine, radius, {w}) for w in words]
        if all(cell.is_disjoint(element_image(cell, powers[i]))
               for cell in cells for i in range(1, n)):
            chosen = cells
            break
    if chosen is None:
        raise CapExceeded("no small enough neighborhoods found", cap=caps.radius_search)

    base = CloSet.empty(engine)
    shadow = CloSet.empty(engine)
    for cell in chosen:
        base = base.union(cell.minus(shadow))
        for i in range(-(n - 1), n):
            img = element_image(cell, powers[i]) if i else cell
            shadow = shadow.union(img)

    translates = [base if i == 0 else element_image(base, powers[i]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not translates[i].is_disjoint(translates[j]):
                raise AssertionError("Rokhlin translates are not disjoint")
    acc = base
    fwd = bwd = base
    for _ in range(caps.orbit):
        if acc == CloSet.full(engine):
            return base
        fwd = element_image(fwd, f)
        bwd = element_image(bwd, inverse(f))
        grown = acc.union(fwd).union(bwd)
        if grown == acc:
            raise AssertionError("f-orbit of the base does not cover the space")
        acc = grown.reduced()
    raise CapExceeded("cover verification did not terminate", cap=caps.orbit)
